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
// Exact evaluation of the lifting function phi of the bilinear cover
// inequality and of its two-slope subadditive upper bound psi.
//
//   phi(delta) = max{ -1 - sum c_i (sqrt(x_i y_i) - 1)
//                     : sum a_i x_i y_i >= d_lambda - delta, box }
//
// For delta < -delta_cover the feasible set is empty and phi is minus
// infinity, represented as an empty optional so it never enters arithmetic.

#ifndef BILIFT_LIFTING_HPP_
#define BILIFT_LIFTING_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bilift/instance.hpp"

namespace bilift {

struct LiftingSample {
  double delta = 0.0;
  std::optional<double> phi;  // empty encodes minus infinity
  double psi = 0.0;
};

// Exact lifting function value.
//  - delta < -Delta: empty (minus infinity).
//  - -Delta <= delta <= 0: closed form
//      (sqrt(a_max - Delta) - sqrt(a_max - Delta - delta))
//        / (sqrt(a_max) - sqrt(a_max - Delta)),
//    which reduces to -sqrt(-delta)/sqrt(Delta) when a_max = Delta.
//  - delta > 0: exact maximum by enumeration over all-but-one-binary
//    structures: one free index j, a zero set S of the remaining indices,
//    the rest at product 1, and the free product at the clamped tight value.
// The enumeration is exponential in |I|; throws CapExceededError beyond
// enum_cap indices.
std::optional<double> phi_exact(const CoverContext& cover, double delta,
                                int enum_cap = 24);

// Two-slope subadditive upper bound:
//   l_plus (delta + Delta) - 1  for delta <= -Delta,
//   l_minus delta               for -Delta <= delta <= 0,
//   l_plus delta                for delta >= 0.
double psi(const CoverContext& cover, double delta);

// Uniform grid of (delta, phi, psi) rows, endpoints included.
// Requires delta_lo < delta_hi and steps >= 2.
std::vector<LiftingSample> sample_lifting(const CoverContext& cover,
                                          double delta_lo, double delta_hi,
                                          int steps);

// CSV with columns delta,phi,psi; phi prints "-inf" when minus infinity.
// `header` lines, when nonempty, are emitted first prefixed with "# ".
void write_lifting_csv(std::ostream& out,
                       const std::vector<LiftingSample>& samples,
                       const std::vector<std::string>& header = {});

}  // namespace bilift

#endif  // BILIFT_LIFTING_HPP_
