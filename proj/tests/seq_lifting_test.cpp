// Copyright 2026 The Bilift Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include <doctest.h>

#include "bilift/lifted_cut.hpp"
#include "bilift/seed_cut.hpp"
#include "bilift/seq_lifting.hpp"

using namespace bilift;

namespace {

// x1 x2 + 2 x1 x3 >= 1 over the unit cube, grouped as x-side (x2, x3) and
// y-side (x1). Lifting x3 from its lower bound with seed sqrt(x1 x2) >= 1.
BipartiteInstance chain_instance() {
  BipartiteInstance inst;
  inst.m = 2;
  inst.n = 1;
  inst.q = {1.0, 2.0};
  inst.a = {0.0, 0.0};
  inst.b = {0.0};
  inst.c = 1.0;
  return inst;
}

SeedInequality chain_seed() {
  SeedInequality seed;
  seed.free_x = {0};
  seed.free_y = {0};
  seed.h = [](std::span<const double> xs, std::span<const double> ys) {
    return std::sqrt(std::max(xs[0] * ys[0], 0.0));
  };
  seed.rhs = 1.0;
  seed.fixed_x = {0.0, 0.0};
  seed.fixed_y = {0.0};
  return seed;
}

// (x - 1/4)(y - 1/2) >= xhat/4 + 1/8 rewritten as
// x y - x/2 - y/4 - xhat/4 >= 0 with x-side (x, xhat) and y-side (y).
BipartiteInstance interior_instance() {
  BipartiteInstance inst;
  inst.m = 2;
  inst.n = 1;
  inst.q = {1.0, 0.0};
  inst.a = {-0.5, -0.25};
  inst.b = {-0.25};
  inst.c = 0.0;
  return inst;
}

SeedInequality interior_seed(double x_tilde) {
  SeedInequality seed;
  seed.free_x = {0};
  seed.free_y = {0};
  seed.h = [](std::span<const double> xs, std::span<const double>) {
    return xs[0];
  };
  seed.rhs = 0.75;
  seed.fixed_x = {0.0, x_tilde};
  seed.fixed_y = {0.0};
  return seed;
}

}  // namespace

TEST_SUITE_BEGIN("seq_lifting");

TEST_CASE("bipartite plumbing") {
  const BipartiteInstance inst = chain_instance();
  const std::vector<double> x{0.5, 1.0}, y{1.0};
  CHECK(inst.constraint_lhs(x, y) == doctest::Approx(2.5));
  const BipartiteInstance t = inst.transposed();
  const std::vector<double> ty{0.5, 1.0}, tx{1.0};
  CHECK(t.constraint_lhs(tx, ty) == doctest::Approx(2.5));

  SeparableInstance sep;
  sep.a = {2.0, -1.0};
  sep.d = 0.5;
  const BipartiteInstance diag = BipartiteInstance::from_separable(sep);
  const std::vector<double> sx{0.5, 1.0}, sy{1.0, 0.25};
  CHECK(diag.constraint_lhs(sx, sy) ==
        doctest::Approx(sep.slack(sx, sy) + sep.d));
}

TEST_CASE("chain example lifts with coefficient two") {
  const LiftResult r = lift_coefficient(chain_instance(), chain_seed(), 1);
  CHECK(r.estimate == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(r.coefficient >= r.estimate);
  CHECK(r.validated);
  CHECK(r.min_slack >= -1e-6);
}

TEST_CASE("grid coarsening stays within the margin") {
  LiftOptions fine;
  fine.grid = 64;
  LiftOptions coarse;
  coarse.grid = 24;
  const LiftResult rf = lift_coefficient(chain_instance(), chain_seed(), 1, fine);
  const LiftResult rc =
      lift_coefficient(chain_instance(), chain_seed(), 1, coarse);
  CHECK(rc.coefficient >= rf.coefficient - rf.margin);
}

TEST_CASE("redundant fixing reports a nonpositive coefficient") {
  // x1 y1 >= 1/4 with a second x variable absent from the constraint; the
  // seed sqrt(x1 y1) >= 1/2 is already valid for the whole set.
  BipartiteInstance inst;
  inst.m = 2;
  inst.n = 1;
  inst.q = {1.0, 0.0};
  inst.a = {0.0, 0.0};
  inst.b = {0.0};
  inst.c = 0.25;
  SeedInequality seed;
  seed.free_x = {0};
  seed.free_y = {0};
  seed.h = [](std::span<const double> xs, std::span<const double> ys) {
    return std::sqrt(std::max(xs[0] * ys[0], 0.0));
  };
  seed.rhs = 0.5;
  seed.fixed_x = {0.0, 0.0};
  seed.fixed_y = {0.0};
  const LiftResult r = lift_coefficient(inst, seed, 1);
  CHECK(r.estimate <= 0.0);
  // the inequality with a zero coefficient is the seed itself, still valid
  Rng rng(2207);
  for (int s = 0; s < 5000; ++s) {
    const std::vector<double> x{rng.uniform(), rng.uniform()};
    const std::vector<double> y{rng.uniform()};
    if (inst.constraint_lhs(x, y) < inst.c) continue;
    CHECK(std::sqrt(x[0] * y[0]) >= seed.rhs - 1e-9);
  }
}

TEST_CASE("upper bound fixing through complementation") {
  // Separable cover 2 x1 y1 + 2 x2 y2 >= 3 with the second pair fixed at one
  // and the bilinear cover cut of the restriction as seed.
  SeparableInstance sep;
  sep.a = {2.0, 2.0};
  sep.d = 3.0;
  const BipartiteInstance inst = BipartiteInstance::from_separable(sep);
  const double c1 = 2.0 + std::sqrt(2.0);
  SeedInequality seed;
  seed.free_x = {0};
  seed.free_y = {0};
  seed.h = [c1](std::span<const double> xs, std::span<const double> ys) {
    return c1 * (std::sqrt(std::max(xs[0] * ys[0], 0.0)) - 1.0);
  };
  seed.rhs = -1.0;
  seed.fixed_x = {0.0, 1.0};
  seed.fixed_y = {0.0, 1.0};
  const LiftResult r = lift_coefficient(inst, seed, 1);
  // the critical coefficient for h + f (x2 - 1) >= -1 is l_minus * a = 2
  CHECK(r.estimate == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(r.coefficient <= r.estimate);  // safe side is below for upper fixings
  CHECK(r.validated);

  // the affine term dominates the gamma lifting term on the y = 1 slice
  SeparableInstance full;
  full.a = {2.0, 2.0};
  full.d = 3.0;
  const Partition part = Partition::make(full, {0}, {}, {1});
  const CoverContext cover = cover_context(full, part);
  const GammaTerm gamma = build_gamma(cover, 1, 2.0, GammaClass::kJ1PlusLarge);
  for (int g = 0; g <= 100; ++g) {
    const double x = g / 100.0;
    CHECK(r.coefficient * (x - 1.0) >= gamma.eval(x, 1.0) - 1e-9);
  }
}

TEST_CASE("interior fixing yields the two-point certificate") {
  const auto cert =
      nonliftable_certificate(interior_instance(), interior_seed(0.5), 1);
  REQUIRE(cert.has_value());
  CHECK(cert->upper_bound == -1.5);  // from the origin witness
  CHECK(cert->lower_bound == -0.5);  // from the all-ones witness
  CHECK(cert->lower_bound > cert->upper_bound);
  CHECK(cert->upper_x == std::vector<double>{0.0, 0.0});
  CHECK(cert->upper_y == std::vector<double>{0.0});
  CHECK(cert->lower_x == std::vector<double>{1.0, 1.0});
  CHECK(cert->lower_y == std::vector<double>{1.0});
  // witnesses are feasible by direct substitution
  const BipartiteInstance inst = interior_instance();
  CHECK(inst.constraint_lhs(cert->lower_x, cert->lower_y) >= inst.c);
  CHECK(inst.constraint_lhs(cert->upper_x, cert->upper_y) >= inst.c);
}

TEST_CASE("bound fixings never certify") {
  CHECK_FALSE(
      nonliftable_certificate(interior_instance(), interior_seed(0.0), 1)
          .has_value());
  CHECK_FALSE(
      nonliftable_certificate(interior_instance(), interior_seed(1.0), 1)
          .has_value());
  // the liftable chain example is fixed at a bound, so no certificate
  CHECK_FALSE(
      nonliftable_certificate(chain_instance(), chain_seed(), 1).has_value());
}

TEST_CASE("input validation") {
  const BipartiteInstance inst = chain_instance();
  SeedInequality seed = chain_seed();
  seed.fixed_x[1] = 0.25;
  CHECK_THROWS_AS(lift_coefficient(inst, seed, 1), PreconditionError);
  CHECK_THROWS_AS(lift_coefficient(inst, chain_seed(), 0), PreconditionError);

  // a convex evaluator is rejected by the concavity spot check
  SeedInequality convex = chain_seed();
  convex.h = [](std::span<const double> xs, std::span<const double>) {
    return xs[0] * xs[0];
  };
  CHECK_THROWS_AS(lift_coefficient(inst, convex, 1), PreconditionError);

  // empty restriction: demand more than the free pair can deliver
  BipartiteInstance hungry = chain_instance();
  hungry.c = 5.0;
  CHECK_THROWS_AS(lift_coefficient(hungry, chain_seed(), 1), PreconditionError);
}

TEST_SUITE_END();
