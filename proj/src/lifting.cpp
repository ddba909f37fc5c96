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

#include "bilift/lifting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "bilift/seed_cut.hpp"

namespace bilift {

namespace {

// Closed form on [-Delta, 0], driven by the largest coefficient.
double phi_nonpositive(const CoverContext& cover, double delta) {
  const double a_max = *std::max_element(cover.a_I.begin(), cover.a_I.end());
  const double d_max = a_max - cover.delta;
  const double num = std::sqrt(std::max(d_max, 0.0)) -
                     std::sqrt(std::max(d_max - delta, 0.0));
  const double den = std::sqrt(a_max) - std::sqrt(std::max(d_max, 0.0));
  return num / den;
}

}  // namespace

std::optional<double> phi_exact(const CoverContext& cover, double delta,
                                int enum_cap) {
  if (delta < -cover.delta) return std::nullopt;
  if (delta <= 0.0) return phi_nonpositive(cover, delta);

  const int m = static_cast<int>(cover.I.size());
  if (m > enum_cap)
    throw CapExceededError("phi_exact: cover too large for exact enumeration");
  const SeedCut seed = build_seed(cover);
  double total = 0.0;
  for (double v : cover.a_I) total += v;
  const double rhs = cover.d_lambda - delta;

  double best = -std::numeric_limits<double>::infinity();
  bool feasible = false;
  for (int j = 0; j < m; ++j) {
    const double aj = cover.a_I[j];
    const std::uint64_t limit = std::uint64_t{1} << (m - 1);
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      // Bits of `mask` select the zero set S among indices other than j.
      double zero_sum = 0.0;
      double coeff_sum = 0.0;
      std::uint64_t bits = mask;
      for (int pos = 0; pos < m - 1; ++pos) {
        const int idx = pos < j ? pos : pos + 1;
        if (bits & 1) {
          zero_sum += cover.a_I[idx];
          coeff_sum += seed.coeffs[idx];
        }
        bits >>= 1;
      }
      const double ones_sum = total - aj - zero_sum;
      const double t_lo = (rhs - ones_sum) / aj;
      if (t_lo > 1.0) continue;  // this structure cannot reach the rhs
      const double t = std::clamp(t_lo, 0.0, 1.0);
      const double value =
          coeff_sum + seed.coeffs[j] * (1.0 - std::sqrt(t)) - 1.0;
      feasible = true;
      best = std::max(best, value);
    }
  }
  if (!feasible) return std::nullopt;
  return best;
}

double psi(const CoverContext& cover, double delta) {
  if (delta <= -cover.delta)
    return cover.l_plus * (delta + cover.delta) - 1.0;
  if (delta <= 0.0) return cover.l_minus * delta;
  return cover.l_plus * delta;
}

std::vector<LiftingSample> sample_lifting(const CoverContext& cover,
                                          double delta_lo, double delta_hi,
                                          int steps) {
  if (!(delta_lo < delta_hi) || steps < 2)
    throw PreconditionError("sample_lifting: need delta_lo < delta_hi, steps >= 2");
  std::vector<LiftingSample> rows;
  rows.reserve(steps);
  for (int k = 0; k < steps; ++k) {
    const double delta =
        delta_lo + static_cast<double>(k) * (delta_hi - delta_lo) /
                       static_cast<double>(steps - 1);
    rows.push_back({delta, phi_exact(cover, delta), psi(cover, delta)});
  }
  return rows;
}

void write_lifting_csv(std::ostream& out,
                       const std::vector<LiftingSample>& samples,
                       const std::vector<std::string>& header) {
  char buf[64];
  auto fmt = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  for (const std::string& line : header) out << "# " << line << "\n";
  out << "delta,phi,psi\n";
  for (const LiftingSample& s : samples) {
    out << fmt(s.delta) << ',' << (s.phi ? fmt(*s.phi) : std::string("-inf"))
        << ',' << fmt(s.psi) << "\n";
  }
}

}  // namespace bilift
