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
// The bilinear cover inequality
//
//   sum_{i in I} sqrt(a_i)/(sqrt(a_i)-sqrt(d_i)) * (sqrt(x_i y_i) - 1) >= -1
//
// built from a minimal cover, plus the unbounded-relaxation comparison cut
// sum_i sqrt(a_i/d) sqrt(x_i y_i) >= 1 it dominates.

#ifndef BILIFT_SEED_CUT_HPP_
#define BILIFT_SEED_CUT_HPP_

#include <vector>

#include "bilift/instance.hpp"
#include "bilift/point.hpp"

namespace bilift {

struct SeedCut {
  std::vector<int> index_map;   // indices of I, sorted
  std::vector<double> coeffs;   // c_i = sqrt(a_i)/(sqrt(a_i)-sqrt(d_i)), >= 1
  std::vector<double> a_I;      // raw data kept so consumers can rebuild the
  std::vector<double> d_I;      // second-order cone form exactly
  double rhs = -1.0;
};

// Builds the cut from a cover context. When d_i = 0 the coefficient is
// exactly 1.
SeedCut build_seed(const CoverContext& cover);

// Slack of the cut at a point: sum c_i (sqrt(x_i y_i) - 1) + 1. Nonnegative
// means satisfied. Products are clamped at 0 before the square root to guard
// against -1e-18 noise.
double eval_seed(const SeedCut& cut, const PointPair& point);

// Comparison inequality for the relaxation that drops variable upper bounds:
// sum_i sqrt(a_i/d) sqrt(x_i y_i) >= 1, evaluated as value - 1.
struct ComparisonCut {
  std::vector<double> coeffs;  // sqrt(a_i)/sqrt(d)
  double rhs = 1.0;
};

// Requires all a_i > 0 and d > 0; throws PreconditionError otherwise.
ComparisonCut build_crt(const SeparableInstance& inst);

double eval_crt(const ComparisonCut& cut, const PointPair& point);

}  // namespace bilift

#endif  // BILIFT_SEED_CUT_HPP_
