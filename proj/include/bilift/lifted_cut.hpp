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
// The lifted bilinear cover inequality: the seed cut on I plus one concave
// gamma term per fixed pair. Each gamma dominates the two-slope bound psi
// composed with the pair's constraint contribution and vanishes at the
// pair's fixing point, (0,0) for J0 classes and (1,1) for J1 classes.

#ifndef BILIFT_LIFTED_CUT_HPP_
#define BILIFT_LIFTED_CUT_HPP_

#include <string>
#include <vector>

#include "bilift/instance.hpp"
#include "bilift/point.hpp"
#include "bilift/seed_cut.hpp"

namespace bilift {

enum class GammaClass {
  kJ0Plus,
  kJ0Minus,
  kJ1PlusLarge,  // a_i >= a_{i0}, requires a strict cover index
  kJ1PlusSmall,
  kJ1Minus,
};

std::string gamma_class_name(GammaClass cls);
GammaClass gamma_class_from_name(const std::string& name);

// One concave lifting term. All slopes and offsets are precomputed so a
// serialized term can be re-evaluated without the originating cover.
struct GammaTerm {
  int index = 0;
  GammaClass cls = GammaClass::kJ0Plus;
  double a = 0.0;
  double l_plus = 0.0;
  double l_minus = 0.0;
  double delta = 0.0;
  // clamp(l_plus * delta - 1, 0, inf); mathematically nonnegative, clamped so
  // the fixing point evaluates to exactly zero under rounding.
  double big_offset = 0.0;
  // J1PlusLarge only: value of the sqrt branch at (1,1) (clamped at 0) and
  // its slope in sqrt(xy), plus the seed-style coefficient of the h branch.
  double g_at_one = 0.0;
  double g_slope = 0.0;
  double seed_coeff = 0.0;

  double eval(double x, double y) const;
};

struct LiftedCut {
  SeedCut seed;
  std::vector<GammaTerm> gammas;  // one per index outside I
  double rhs = -1.0;
};

// Builds a single term. Throws ClassMismatchError when the tag disagrees
// with the sign of a_i, or when kJ1PlusLarge is requested with an empty
// strict set or a_i < a_{i0}.
GammaTerm build_gamma(const CoverContext& cover, int index, double a_i,
                      GammaClass cls);

// Assembles seed plus gamma terms for a minimal-cover yielding partition.
// J1-plus indices take the large form when the strict set is nonempty and
// a_i >= a_{i0}, and the small form otherwise. Zero coefficients produce
// identically-zero terms through the same formulas.
LiftedCut build_lifted_cut(const SeparableInstance& inst,
                           const Partition& partition);

// Slack: sum_{i in I} c_i (sqrt(x_i y_i) - 1) + sum gammas + 1.
double eval_lifted(const LiftedCut& cut, const PointPair& point);

}  // namespace bilift

#endif  // BILIFT_LIFTED_CUT_HPP_
