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
// Oracles and harnesses: extreme-point enumeration, feasible rejection
// sampling, cut validity reports, and the strength computations used by the
// constant-factor approximation check.

#ifndef BILIFT_VERIFY_HPP_
#define BILIFT_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "bilift/instance.hpp"
#include "bilift/point.hpp"

namespace bilift {

// Nonnegative linear objective sum_i (p_i x_i + q_i y_i). Evaluations swap
// p_i and q_i internally where needed so callers need not order them.
struct LinearObjective {
  std::vector<double> p;
  std::vector<double> q;
};

struct ValidityReport {
  double min_slack = 0.0;
  PointPair witness;
  std::int64_t points_checked = 0;
  bool violated = false;
  double tolerance = 0.0;
  std::uint64_t rng_seed = 0;
  std::int64_t samples_requested = 0;
  std::int64_t samples_obtained = 0;
  bool low_acceptance = false;
};

using CutEvaluator = std::function<double(const PointPair&)>;

// Visits candidate extreme points of the instance: every feasible fully
// binary corner, plus, for each free index i and each assignment of the
// other pairs to product 0 (via (0,0), (0,1), (1,0)) or 1 (via (1,1)), the
// constraint-tight product t in [0,1] decomposed three ways as (t,1), (1,t)
// and (sqrt t, sqrt t). Only feasible points are visited. Throws
// CapExceededError when n exceeds cap_n.
void for_each_extreme_point(const SeparableInstance& inst,
                            const std::function<void(const PointPair&)>& visit,
                            int cap_n = 14);

std::vector<PointPair> enumerate_extreme_points(const SeparableInstance& inst,
                                                int cap_n = 14);

struct SampleResult {
  std::vector<PointPair> points;
  std::int64_t attempts = 0;
  bool low_acceptance = false;  // acceptance rate fell below 1e-4
};

// Rejection sampling from the uniform box, deterministic for a fixed seed.
// Returns fewer than count points when the measured acceptance rate drops
// below 1e-4, with the shortfall reported rather than retried forever.
SampleResult sample_feasible(const SeparableInstance& inst, std::int64_t count,
                             std::uint64_t rng_seed);

struct ValidityOptions {
  std::int64_t samples = 10000;
  std::uint64_t rng_seed = 42;
  double tolerance = 1e-9;
  bool enumerate = true;
  int enumeration_cap_n = 14;
};

// Evaluates a cut on the enumerated extreme points and on rejection-sampled
// feasible points; reports the minimum slack with its witness. The witness
// is the first point attaining the minimum in deterministic visit order.
ValidityReport check_validity(const CutEvaluator& cut,
                              const SeparableInstance& inst,
                              const ValidityOptions& options = {});

// Cheapest (p x + q y) over {(x, y) in [0,1]^2 : sqrt(x y) = alpha}:
//   0                      when max(p,q) = 0,
//   2 sqrt(p q) alpha      when alpha <= sqrt(min/max),
//   max(p,q) alpha^2 + min otherwise.
double theta(double p, double q, double alpha);

// Exact minimum of the objective over the covering set (the whole index set
// forms a minimal cover of d): min over i of picking the tight pair at i and
// everything else at 1. Throws NotMinimalCoverError.
double z_star(const SeparableInstance& inst, const LinearObjective& obj);

// Minimum of the objective over the bilinear cover inequality relaxation,
// reduced to min sum theta_i(alpha_i) subject to sum c_i (alpha_i - 1) >= -1
// over the alpha box and solved exactly by a search on the single Lagrange
// multiplier of the separable convex program.
double z_relax(const SeparableInstance& inst, const LinearObjective& obj,
               double tol = 1e-9);

struct StrengthReport {
  double z_l = 0.0;
  double z_star = 0.0;
  double ratio = 1.0;  // z_star / z_l, with 0/0 reported as 1
};

StrengthReport approx_ratio(const SeparableInstance& inst,
                            const LinearObjective& obj);

}  // namespace bilift

#endif  // BILIFT_VERIFY_HPP_
