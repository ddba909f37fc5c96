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

#include "bilift/seed_cut.hpp"
#include "bilift/verify.hpp"
#include "oracles.hpp"

using namespace bilift;

namespace {

SeparableInstance make(std::vector<double> a, double d) {
  SeparableInstance inst;
  inst.a = std::move(a);
  inst.d = d;
  return inst;
}

SeedCut seed_for(const SeparableInstance& inst) {
  return build_seed(cover_context(inst, Partition::trivial(inst)));
}

}  // namespace

TEST_SUITE_BEGIN("seed_cut");

TEST_CASE("coefficients") {
  const SeparableInstance inst = make({2.0, 2.0}, 3.0);
  const SeedCut cut = seed_for(inst);
  // sqrt(2)/(sqrt(2)-1) rationalizes to 2 + sqrt(2)
  CHECK(cut.coeffs[0] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-14));
  CHECK(cut.coeffs[1] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-14));
  CHECK(cut.rhs == -1.0);

  const SeedCut unit = seed_for(make({1.0, 1.0}, 1.0));
  CHECK(unit.coeffs[0] == 1.0);  // d_i = 0 forces exactly 1
  CHECK(unit.coeffs[1] == 1.0);

  const SeedCut mixed = seed_for(make({2.0, 1.0}, 2.0));
  CHECK(mixed.coeffs[0] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-14));
  CHECK(mixed.coeffs[1] == 1.0);
}

TEST_CASE("evaluation at reference points") {
  const SeparableInstance inst = make({2.0, 2.0}, 3.0);
  const SeedCut cut = seed_for(inst);
  CHECK(eval_seed(cut, inst.make_point({1.0, 1.0}, {1.0, 1.0})) ==
        doctest::Approx(1.0).epsilon(1e-15));
  // (2+sqrt 2)(sqrt(1/2)-1) = -1, the canonical tight point
  CHECK(eval_seed(cut, inst.make_point({0.5, 1.0}, {1.0, 1.0})) ==
        doctest::Approx(0.0).epsilon(1e-14));
  // the infeasible corner is cut off
  CHECK(eval_seed(cut, inst.make_point({0.0, 1.0}, {0.0, 1.0})) ==
        doctest::Approx(1.0 - (2.0 + std::sqrt(2.0))).epsilon(1e-14));
}

TEST_CASE("tight family across random covers") {
  Rng rng(7101);
  for (int trial = 0; trial < 40; ++trial) {
    const SeparableInstance inst = testing::random_cover(rng, 1, 6);
    const SeedCut cut = seed_for(inst);
    const CoverContext ctx = cover_context(inst, Partition::trivial(inst));
    for (int i = 0; i < inst.n(); ++i) {
      // d_i may round one ulp negative at a boundary coefficient
      const double t = std::max(ctx.d_i[i], 0.0) / inst.a[i];
      std::vector<double> x(inst.n(), 1.0), y(inst.n(), 1.0);
      x[i] = t;
      CHECK(std::abs(eval_seed(cut, inst.make_point(x, y))) <= 1e-9);
      x[i] = std::sqrt(t);
      y[i] = std::sqrt(t);
      CHECK(std::abs(eval_seed(cut, inst.make_point(x, y))) <= 1e-9);
    }
  }
}

TEST_CASE("validity on extreme points and samples") {
  Rng rng(7102);
  for (int trial = 0; trial < 10; ++trial) {
    const SeparableInstance inst = testing::random_cover(rng, 1, 5);
    const SeedCut cut = seed_for(inst);
    ValidityOptions opts;
    opts.samples = 2000;
    opts.rng_seed = 99 + trial;
    const ValidityReport report = check_validity(
        [&](const PointPair& p) { return eval_seed(cut, p); }, inst, opts);
    CHECK(report.min_slack >= -1e-9);
    CHECK_FALSE(report.violated);
  }
}

TEST_CASE("comparison cut for the unbounded relaxation") {
  const SeparableInstance inst = make({2.0, 2.0}, 3.0);
  const ComparisonCut crt = build_crt(inst);
  CHECK(crt.coeffs[0] == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
  CHECK(crt.coeffs[1] == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
  const double at_tight =
      eval_crt(crt, inst.make_point({0.5, 1.0}, {1.0, 1.0}));
  CHECK(at_tight ==
        doctest::Approx(std::sqrt(2.0 / 3.0) * (std::sqrt(0.5) + 1.0) - 1.0)
            .epsilon(1e-12));
  CHECK(at_tight >= 0.0);

  const SeparableInstance one = make({1.0}, 1.0);
  CHECK(eval_crt(build_crt(one), one.make_point({1.0}, {1.0})) ==
        doctest::Approx(0.0));

  CHECK_THROWS_AS(build_crt(make({1.0, -1.0}, 1.0)), PreconditionError);
  CHECK_THROWS_AS(build_crt(make({1.0}, 0.0)), PreconditionError);
  CHECK_THROWS_AS(build_crt(make({1.0}, -2.0)), PreconditionError);
}

TEST_CASE("seed cut dominates the comparison cut on box points") {
  Rng rng(7103);
  for (int trial = 0; trial < 10; ++trial) {
    const SeparableInstance inst = testing::random_cover(rng, 1, 5);
    const SeedCut cut = seed_for(inst);
    const ComparisonCut crt = build_crt(inst);
    std::vector<double> x(inst.n()), y(inst.n());
    for (int s = 0; s < 10000; ++s) {
      for (int i = 0; i < inst.n(); ++i) {
        x[i] = rng.uniform();
        y[i] = rng.uniform();
      }
      const PointPair p = inst.make_point(x, y);
      if (eval_seed(cut, p) >= 0.0) CHECK(eval_crt(crt, p) >= -1e-9);
    }
  }
}

TEST_SUITE_END();
