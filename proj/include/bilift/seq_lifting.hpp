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
//
// Numeric sequential lifting for general bipartite bilinear sets
//
//   x^T Q y + a^T x + b^T y >= c,  (x, y) in [0,1]^m x [0,1]^n,
//
// with one variable unfixed at a time. A concave seed inequality
// h(x_C, y_D) >= r valid for the bound-fixed restriction is extended by an
// affine term in the lifted variable; the coefficient is estimated on a grid
// over the lifted variable's range and validated by sampling. For fixings at
// interior values a two-point certificate can prove that no affine lifting
// exists.

#ifndef BILIFT_SEQ_LIFTING_HPP_
#define BILIFT_SEQ_LIFTING_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bilift/instance.hpp"

namespace bilift {

struct BipartiteInstance {
  int m = 0;
  int n = 0;
  std::vector<double> q;  // row-major m x n
  std::vector<double> a;  // length m
  std::vector<double> b;  // length n
  double c = 0.0;

  double at(int i, int j) const { return q[static_cast<std::size_t>(i) * n + j]; }
  double constraint_lhs(std::span<const double> x,
                        std::span<const double> y) const;

  // Diagonal embedding of a separable instance: Q = diag(a), zero linear
  // terms, right-hand side d.
  static BipartiteInstance from_separable(const SeparableInstance& inst);

  // Swaps the roles of the two variable groups.
  BipartiteInstance transposed() const;
};

// Concave seed inequality h(x_C, y_D) >= r for the restriction where every
// coordinate outside C and D sits at its fixing value. The evaluator
// receives the free coordinates in the (sorted) order of free_x and free_y.
// Entries of fixed_x / fixed_y at free positions are ignored.
struct SeedInequality {
  std::vector<int> free_x;  // C, sorted
  std::vector<int> free_y;  // D, sorted
  std::function<double(std::span<const double>, std::span<const double>)> h;
  double rhs = 0.0;
  std::vector<double> fixed_x;  // length m
  std::vector<double> fixed_y;  // length n
};

struct LiftOptions {
  int grid = 64;             // log-spaced points over the lifted variable
  int arc_samples = 33;      // samples along each constraint arc
  double xhat_min = 1e-6;    // smallest grid value
  double margin_rel = 0.01;  // relative safety inflation of the estimate
  double margin_abs = 1e-6;
  std::uint64_t rng_seed = 7;
  std::int64_t validation_samples = 20000;
  int pattern_cap = 1 << 20;       // free-pair structures per grid value
  int concavity_samples = 256;     // midpoint spot checks of the seed
};

struct LiftResult {
  // Best grid estimate of the critical coefficient for the inequality
  //   h(x_C, y_D) + coefficient * (x_k - fixed value) >= r.
  double estimate = 0.0;
  // Estimate pushed to the safe side by the reported margin.
  double coefficient = 0.0;
  double margin = 0.0;
  int grid_points = 0;
  // Validation sweep of the inflated inequality over the restriction with
  // only x_k unfixed.
  double min_slack = 0.0;
  std::int64_t points_checked = 0;
  bool validated = false;
};

// Lifts fixed variable x_k (fixing value must be 0 or 1). Throws
// PreconditionError when the seed restriction is empty or the seed fails its
// concavity spot check, and CapExceededError when the structure enumeration
// is too large. Lifting a y-side variable is done by transposing first.
LiftResult lift_coefficient(const BipartiteInstance& inst,
                            const SeedInequality& seed, int k,
                            const LiftOptions& options = {});

// Certificate that no affine lifting of x_k exists for an interior fixing
// value: two feasible witness points whose admissible coefficient ranges are
// disjoint. Bounds are computed directly from the witness coordinates.
struct TwoPointCertificate {
  std::vector<double> lower_x, lower_y;  // witness forcing alpha >= lower_bound
  std::vector<double> upper_x, upper_y;  // witness forcing alpha <= upper_bound
  double lower_bound = 0.0;
  double upper_bound = 0.0;
};

struct CertificateOptions {
  std::int64_t samples = 50000;
  std::uint64_t rng_seed = 11;
  int corner_cap = 1 << 20;
};

// Returns a certificate when one exists among the scanned points (all binary
// corners of the unfixed coordinates plus x_k, then random feasible samples),
// or nothing. Bound fixing values never produce a certificate: one side of
// the comparison is empty.
std::optional<TwoPointCertificate> nonliftable_certificate(
    const BipartiteInstance& inst, const SeedInequality& seed, int k,
    const CertificateOptions& options = {});

}  // namespace bilift

#endif  // BILIFT_SEQ_LIFTING_HPP_
