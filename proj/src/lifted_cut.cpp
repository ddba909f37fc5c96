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

#include "bilift/lifted_cut.hpp"

#include <algorithm>
#include <cmath>

namespace bilift {

std::string gamma_class_name(GammaClass cls) {
  switch (cls) {
    case GammaClass::kJ0Plus: return "J0plus";
    case GammaClass::kJ0Minus: return "J0minus";
    case GammaClass::kJ1PlusLarge: return "J1plus_large";
    case GammaClass::kJ1PlusSmall: return "J1plus_small";
    case GammaClass::kJ1Minus: return "J1minus";
  }
  return "J0plus";
}

GammaClass gamma_class_from_name(const std::string& name) {
  if (name == "J0plus") return GammaClass::kJ0Plus;
  if (name == "J0minus") return GammaClass::kJ0Minus;
  if (name == "J1plus_large") return GammaClass::kJ1PlusLarge;
  if (name == "J1plus_small") return GammaClass::kJ1PlusSmall;
  if (name == "J1minus") return GammaClass::kJ1Minus;
  throw ParseError("unknown gamma class: " + name);
}

double GammaTerm::eval(double x, double y) const {
  const double m = std::min(x, y);
  switch (cls) {
    case GammaClass::kJ0Plus:
      return l_plus * a * m;
    case GammaClass::kJ1Minus:
      return -l_plus * a * std::min(2.0 - x - y, 1.0);
    case GammaClass::kJ0Minus: {
      const double s = x + y - 1.0;
      return std::min({l_minus * a * s, l_plus * a * s + big_offset, 0.0});
    }
    case GammaClass::kJ1PlusSmall: {
      const double g_tilde = l_plus * a * (m - 1.0) + big_offset;
      const double h_tilde = l_minus * a * (m - 1.0);
      return std::min(g_tilde, h_tilde);
    }
    case GammaClass::kJ1PlusLarge: {
      const double g_tilde = l_plus * a * (m - 1.0) + big_offset;
      const double h_tilde = l_minus * a * (m - 1.0);
      const double root = std::sqrt(std::max(x * y, 0.0));
      const double g = g_at_one + g_slope * (root - 1.0);
      const double h = seed_coeff * (root - 1.0);
      return std::min({g_tilde, h_tilde, g, h});
    }
  }
  return 0.0;
}

GammaTerm build_gamma(const CoverContext& cover, int index, double a_i,
                      GammaClass cls) {
  const bool j1_plus =
      cls == GammaClass::kJ1PlusLarge || cls == GammaClass::kJ1PlusSmall;
  const bool wants_positive = cls == GammaClass::kJ0Plus || j1_plus;
  if (wants_positive && a_i < 0.0)
    throw ClassMismatchError("build_gamma: negative coefficient in a plus class");
  if (!wants_positive && a_i >= 0.0)
    throw ClassMismatchError("build_gamma: nonnegative coefficient in a minus class");
  if (cls == GammaClass::kJ1PlusLarge) {
    if (cover.i_strict.empty())
      throw ClassMismatchError("build_gamma: large form needs a strict cover index");
    if (a_i < cover.a_i0)
      throw ClassMismatchError("build_gamma: large form needs a_i >= a_i0");
  }

  GammaTerm term;
  term.index = index;
  term.cls = cls;
  term.a = a_i;
  term.l_plus = cover.l_plus;
  term.l_minus = cover.l_minus;
  term.delta = cover.delta;
  term.big_offset = std::max(cover.l_plus * cover.delta - 1.0, 0.0);
  if (cls == GammaClass::kJ1PlusLarge) {
    const double di = a_i - cover.delta;
    term.g_slope = cover.l_plus * std::sqrt(di) * std::sqrt(a_i);
    // Mathematically nonnegative whenever a_i >= a_i0; clamp so the cut
    // restricts to the seed exactly at (1,1).
    term.g_at_one = std::max(
        cover.l_plus * std::sqrt(di) * (std::sqrt(a_i) - std::sqrt(di)) - 1.0,
        0.0);
    term.seed_coeff = std::sqrt(a_i) / (std::sqrt(a_i) - std::sqrt(di));
  }
  return term;
}

LiftedCut build_lifted_cut(const SeparableInstance& inst,
                           const Partition& partition) {
  const CoverContext cover = cover_context(inst, partition);
  LiftedCut cut;
  cut.seed = build_seed(cover);
  auto classify = [&](int i, bool in_j1) {
    const double ai = inst.a[i];
    if (!in_j1)
      return ai < 0.0 ? GammaClass::kJ0Minus : GammaClass::kJ0Plus;
    if (ai < 0.0) return GammaClass::kJ1Minus;
    if (!cover.i_strict.empty() && ai >= cover.a_i0)
      return GammaClass::kJ1PlusLarge;
    return GammaClass::kJ1PlusSmall;
  };
  for (int i : partition.J0)
    cut.gammas.push_back(build_gamma(cover, i, inst.a[i], classify(i, false)));
  for (int i : partition.J1)
    cut.gammas.push_back(build_gamma(cover, i, inst.a[i], classify(i, true)));
  std::sort(cut.gammas.begin(), cut.gammas.end(),
            [](const GammaTerm& lhs, const GammaTerm& rhs) {
              return lhs.index < rhs.index;
            });
  return cut;
}

double eval_lifted(const LiftedCut& cut, const PointPair& point) {
  double slack = eval_seed(cut.seed, point);
  for (const GammaTerm& g : cut.gammas)
    slack += g.eval(point.x[g.index], point.y[g.index]);
  return slack;
}

}  // namespace bilift
