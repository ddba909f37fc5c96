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

#include "bilift/seed_cut.hpp"

#include <algorithm>
#include <cmath>

namespace bilift {

SeedCut build_seed(const CoverContext& cover) {
  SeedCut cut;
  cut.index_map = cover.I;
  cut.a_I = cover.a_I;
  cut.d_I = cover.d_i;
  cut.coeffs.reserve(cover.I.size());
  for (std::size_t k = 0; k < cover.I.size(); ++k) {
    const double ai = cover.a_I[k];
    const double di = cover.d_i[k];
    // d_i can round to a negative ulp when a_i sits exactly at delta.
    cut.coeffs.push_back(di <= 0.0
                             ? 1.0
                             : std::sqrt(ai) / (std::sqrt(ai) - std::sqrt(di)));
  }
  return cut;
}

double eval_seed(const SeedCut& cut, const PointPair& point) {
  double lhs = 0.0;
  for (std::size_t k = 0; k < cut.index_map.size(); ++k) {
    const int i = cut.index_map[k];
    const double t = std::max(point.x[i] * point.y[i], 0.0);
    lhs += cut.coeffs[k] * (std::sqrt(t) - 1.0);
  }
  return lhs - cut.rhs;
}

ComparisonCut build_crt(const SeparableInstance& inst) {
  if (!(inst.d > 0.0))
    throw PreconditionError("build_crt: requires d > 0");
  ComparisonCut cut;
  cut.coeffs.reserve(inst.a.size());
  for (double ai : inst.a) {
    if (!(ai > 0.0))
      throw PreconditionError("build_crt: requires all a_i > 0");
    cut.coeffs.push_back(std::sqrt(ai) / std::sqrt(inst.d));
  }
  return cut;
}

double eval_crt(const ComparisonCut& cut, const PointPair& point) {
  double lhs = 0.0;
  for (std::size_t i = 0; i < cut.coeffs.size(); ++i) {
    const double t = std::max(point.x[i] * point.y[i], 0.0);
    lhs += cut.coeffs[i] * std::sqrt(t);
  }
  return lhs - cut.rhs;
}

}  // namespace bilift
