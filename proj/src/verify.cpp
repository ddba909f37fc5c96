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

#include "bilift/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>

#include "bilift/seed_cut.hpp"

namespace bilift {

namespace {

void validate_objective(const SeparableInstance& inst,
                        const LinearObjective& obj) {
  if (static_cast<int>(obj.p.size()) != inst.n() ||
      static_cast<int>(obj.q.size()) != inst.n())
    throw PreconditionError("objective size does not match instance");
  for (int i = 0; i < inst.n(); ++i) {
    if (!std::isfinite(obj.p[i]) || !std::isfinite(obj.q[i]) ||
        obj.p[i] < 0.0 || obj.q[i] < 0.0)
      throw PreconditionError("objective entries must be finite and nonnegative");
  }
}

}  // namespace

void for_each_extreme_point(const SeparableInstance& inst,
                            const std::function<void(const PointPair&)>& visit,
                            int cap_n) {
  const int n = inst.n();
  if (n > cap_n)
    throw CapExceededError("for_each_extreme_point: instance too large");

  PointPair pt;
  pt.x.assign(n, 0.0);
  pt.y.assign(n, 0.0);

  // Fully binary corners, two bits per pair.
  const std::uint64_t corner_limit = std::uint64_t{1} << (2 * n);
  for (std::uint64_t code = 0; code < corner_limit; ++code) {
    for (int i = 0; i < n; ++i) {
      pt.x[i] = static_cast<double>(code >> (2 * i) & 1);
      pt.y[i] = static_cast<double>(code >> (2 * i + 1) & 1);
    }
    pt.slack = inst.slack(pt.x, pt.y);
    if (pt.slack >= 0.0) visit(pt);
  }

  // One free pair, the rest assigned to (0,0), (0,1), (1,0) or (1,1).
  static constexpr double kX[4] = {0.0, 0.0, 1.0, 1.0};
  static constexpr double kY[4] = {0.0, 1.0, 0.0, 1.0};
  std::vector<int> state(n > 1 ? n - 1 : 0, 0);
  for (int free = 0; free < n; ++free) {
    if (inst.a[free] == 0.0) continue;
    std::fill(state.begin(), state.end(), 0);
    while (true) {
      double rest = 0.0;
      for (int pos = 0; pos < n - 1; ++pos) {
        const int idx = pos < free ? pos : pos + 1;
        pt.x[idx] = kX[state[pos]];
        pt.y[idx] = kY[state[pos]];
        if (state[pos] == 3) rest += inst.a[idx];
      }
      const double t = (inst.d - rest) / inst.a[free];
      if (t >= 0.0 && t <= 1.0) {
        const double r = std::sqrt(t);
        const double reps[3][2] = {{t, 1.0}, {1.0, t}, {r, r}};
        for (const auto& rep : reps) {
          pt.x[free] = rep[0];
          pt.y[free] = rep[1];
          pt.slack = inst.slack(pt.x, pt.y);
          visit(pt);
        }
      }
      int pos = 0;
      while (pos < n - 1 && state[pos] == 3) state[pos++] = 0;
      if (pos == n - 1) break;
      ++state[pos];
    }
    if (n == 1) break;  // single mixed-radix word is empty
  }
}

std::vector<PointPair> enumerate_extreme_points(const SeparableInstance& inst,
                                                int cap_n) {
  std::vector<PointPair> points;
  for_each_extreme_point(
      inst, [&points](const PointPair& p) { points.push_back(p); }, cap_n);
  return points;
}

SampleResult sample_feasible(const SeparableInstance& inst, std::int64_t count,
                             std::uint64_t rng_seed) {
  if (count < 1) throw PreconditionError("sample_feasible: count must be >= 1");
  SampleResult result;
  Rng rng(rng_seed);
  const int n = inst.n();
  std::vector<double> x(n), y(n);
  const std::int64_t hard_cap = count * 10000;
  const std::int64_t pilot = 100000;
  while (static_cast<std::int64_t>(result.points.size()) < count) {
    if (result.attempts >= hard_cap) {
      result.low_acceptance = true;
      break;
    }
    if (result.attempts >= pilot) {
      const double rate = static_cast<double>(result.points.size() + 1) /
                          static_cast<double>(result.attempts);
      if (rate < 1e-4) {
        result.low_acceptance = true;
        break;
      }
      // Projected effort to finish at the measured rate; bail out rather
      // than stall a caller that asked for more than the set will yield.
      const double remaining =
          static_cast<double>(count -
                              static_cast<std::int64_t>(result.points.size()));
      if (static_cast<double>(result.attempts) + remaining / rate > 2e7) {
        result.low_acceptance = rate < 1e-4;
        break;
      }
    }
    ++result.attempts;
    for (int i = 0; i < n; ++i) {
      x[i] = rng.uniform();
      y[i] = rng.uniform();
    }
    const double slack = inst.slack(x, y);
    if (slack >= 0.0) {
      PointPair p{x, y, slack};
      result.points.push_back(std::move(p));
    }
  }
  return result;
}

namespace {

// Minimum slack over a point batch; the witness is the first strict minimum
// in batch order, independent of the worker count.
std::pair<double, std::size_t> min_over_batch(const std::vector<PointPair>& pts,
                                              const CutEvaluator& cut) {
  const int workers = worker_threads();
  const std::size_t chunk = 8192;
  if (workers <= 1 || pts.size() <= 2 * chunk) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double v = cut(pts[i]);
      if (v < best) {
        best = v;
        arg = i;
      }
    }
    return {best, arg};
  }
  // One contiguous range per worker; merging ranges in order with a strict
  // minimum keeps the witness identical to a serial scan.
  const std::size_t per = (pts.size() + workers - 1) / workers;
  std::vector<std::future<std::pair<double, std::size_t>>> tasks;
  for (std::size_t lo = 0; lo < pts.size(); lo += per) {
    const std::size_t hi = std::min(lo + per, pts.size());
    tasks.push_back(std::async(std::launch::async, [&pts, &cut, lo, hi] {
      double best = std::numeric_limits<double>::infinity();
      std::size_t arg = lo;
      for (std::size_t i = lo; i < hi; ++i) {
        const double v = cut(pts[i]);
        if (v < best) {
          best = v;
          arg = i;
        }
      }
      return std::make_pair(best, arg);
    }));
  }
  double best = std::numeric_limits<double>::infinity();
  std::size_t arg = 0;
  for (auto& t : tasks) {
    const auto [v, i] = t.get();
    if (v < best) {
      best = v;
      arg = i;
    }
  }
  return {best, arg};
}

}  // namespace

ValidityReport check_validity(const CutEvaluator& cut,
                              const SeparableInstance& inst,
                              const ValidityOptions& options) {
  ValidityReport report;
  report.tolerance = options.tolerance;
  report.rng_seed = options.rng_seed;
  report.samples_requested = options.samples;
  report.min_slack = std::numeric_limits<double>::infinity();

  if (options.enumerate) {
    for_each_extreme_point(
        inst,
        [&](const PointPair& p) {
          const double v = cut(p);
          ++report.points_checked;
          if (v < report.min_slack) {
            report.min_slack = v;
            report.witness = p;
          }
        },
        options.enumeration_cap_n);
  }
  if (options.samples > 0) {
    SampleResult samples =
        sample_feasible(inst, options.samples, options.rng_seed);
    report.samples_obtained = static_cast<std::int64_t>(samples.points.size());
    report.low_acceptance = samples.low_acceptance;
    if (!samples.points.empty()) {
      const auto [v, arg] = min_over_batch(samples.points, cut);
      report.points_checked += report.samples_obtained;
      if (v < report.min_slack) {
        report.min_slack = v;
        report.witness = samples.points[arg];
      }
    }
  }
  if (report.points_checked == 0)
    report.min_slack = 0.0;  // empty set: nothing can violate
  report.violated = report.min_slack < -options.tolerance;
  return report;
}

double theta(double p, double q, double alpha) {
  if (p < q) std::swap(p, q);
  if (q < 0.0) throw PreconditionError("theta: weights must be nonnegative");
  if (p <= 0.0) return 0.0;
  const double knee = std::sqrt(q / p);
  if (alpha <= knee) return 2.0 * std::sqrt(p * q) * alpha;
  return p * alpha * alpha + q;
}

double z_star(const SeparableInstance& inst, const LinearObjective& obj) {
  if (!is_minimal_cover(inst.a, inst.d))
    throw NotMinimalCoverError("z_star: coefficients must form a minimal cover");
  validate_objective(inst, obj);
  const double total = std::accumulate(inst.a.begin(), inst.a.end(), 0.0);
  const double delta = total - inst.d;
  double total_pq = 0.0;
  for (int i = 0; i < inst.n(); ++i) total_pq += obj.p[i] + obj.q[i];
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < inst.n(); ++i) {
    const double di = inst.a[i] - delta;
    const double alpha_star = std::sqrt(std::max(di, 0.0) / inst.a[i]);
    const double v = total_pq - obj.p[i] - obj.q[i] +
                     theta(obj.p[i], obj.q[i], alpha_star);
    best = std::min(best, v);
  }
  return best;
}

namespace {

struct RelaxCoord {
  double c = 0.0;         // seed cut coefficient
  double p = 0.0;         // max weight
  double q = 0.0;         // min weight
  double knee = 0.0;      // sqrt(q/p), end of the linear theta branch
  double top = 0.0;       // 2p, slope of theta at alpha = 1
  double lam_flat = 0.0;  // multiplier activating the linear branch, m / c
  double lam_top = 0.0;   // multiplier capping alpha at 1, top / c
};

// Comparisons happen in multiplier space against the same stored doubles the
// breakpoint list is built from, so a flat coordinate is recognized exactly
// at its own breakpoint.
double relax_alpha(const RelaxCoord& co, double lambda, bool upper) {
  if (lambda < co.lam_flat) return 0.0;
  if (lambda == co.lam_flat) return upper ? co.knee : 0.0;
  return std::clamp(lambda * co.c / co.top, co.knee, 1.0);
}

}  // namespace

// The reduced program min sum theta_i(alpha_i) subject to
// sum c_i alpha_i >= sum c_i - 1 over the alpha box is separable and convex,
// so it is solved on the dual: the coverage sum c_i alpha_i(lambda) is
// piecewise linear and nondecreasing in the single multiplier lambda, with
// an upward jump where a theta with a linear first branch activates. The
// crossing segment is located among the finitely many breakpoints and solved
// in closed form; a crossing inside a jump is settled by waterfilling the
// flat coordinates, all of which cost the same per unit of coverage there.
double z_relax(const SeparableInstance& inst, const LinearObjective& obj,
               double tol) {
  (void)tol;  // the multiplier search below is exact up to rounding
  if (!is_minimal_cover(inst.a, inst.d))
    throw NotMinimalCoverError("z_relax: coefficients must form a minimal cover");
  validate_objective(inst, obj);
  const CoverContext cover = cover_context(inst, Partition::trivial(inst));
  const SeedCut seed = build_seed(cover);

  double needed = std::accumulate(seed.coeffs.begin(), seed.coeffs.end(), 0.0) - 1.0;
  if (needed <= 0.0) return 0.0;

  std::vector<RelaxCoord> coords;
  for (int i = 0; i < inst.n(); ++i) {
    const double p = std::max(obj.p[i], obj.q[i]);
    const double q = std::min(obj.p[i], obj.q[i]);
    if (p <= 0.0) {
      needed -= seed.coeffs[i];  // free coverage
      continue;
    }
    RelaxCoord co;
    co.c = seed.coeffs[i];
    co.p = p;
    co.q = q;
    co.knee = std::sqrt(q / p);
    co.top = 2.0 * p;
    co.lam_flat = 2.0 * std::sqrt(p * q) / co.c;
    co.lam_top = co.top / co.c;
    coords.push_back(co);
  }
  if (needed <= 0.0) return 0.0;

  std::vector<double> breakpoints;
  for (const RelaxCoord& co : coords) {
    if (co.lam_flat > 0.0) breakpoints.push_back(co.lam_flat);
    breakpoints.push_back(co.lam_top);
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()),
                    breakpoints.end());

  auto coverage = [&coords](double lambda, bool upper) {
    double s = 0.0;
    for (const RelaxCoord& co : coords)
      s += co.c * relax_alpha(co, lambda, upper);
    return s;
  };
  auto objective_at = [&coords](const std::vector<double>& alpha) {
    double v = 0.0;
    for (std::size_t i = 0; i < coords.size(); ++i)
      v += theta(coords[i].p, coords[i].q, alpha[i]);
    return v;
  };

  double prev = 0.0;
  for (double bp : breakpoints) {
    if (coverage(bp, true) < needed) {
      prev = bp;
      continue;
    }
    std::vector<double> alpha(coords.size(), 0.0);
    const double below = coverage(bp, false);
    if (below >= needed) {
      // Crossing strictly inside (prev, bp): every coordinate sits in a
      // fixed regime there, so coverage is affine in lambda.
      const double mid = 0.5 * (prev + bp);
      double base = 0.0, slope = 0.0;
      std::vector<int> regime(coords.size(), 0);  // 0 zero, 1 linear, 2 capped
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (mid <= coords[i].lam_flat && coords[i].lam_flat > 0.0) {
          regime[i] = 0;
        } else if (mid >= coords[i].lam_top) {
          regime[i] = 2;
          base += coords[i].c;
        } else {
          regime[i] = 1;
          slope += coords[i].c * coords[i].c / coords[i].top;
        }
      }
      double lambda = slope > 0.0 ? (needed - base) / slope : bp;
      lambda = std::clamp(lambda, prev, bp);
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (regime[i] == 2)
          alpha[i] = 1.0;
        else if (regime[i] == 1)
          alpha[i] = std::clamp(lambda * coords[i].c / coords[i].top,
                                coords[i].knee, 1.0);
      }
    } else {
      // Crossing happens across the jump at bp: fill the flat coordinates
      // until the constraint is met with equality.
      double deficit = needed - below;
      for (std::size_t i = 0; i < coords.size(); ++i)
        alpha[i] = relax_alpha(coords[i], bp, false);
      for (std::size_t i = 0; i < coords.size() && deficit > 0.0; ++i) {
        const double room =
            relax_alpha(coords[i], bp, true) - relax_alpha(coords[i], bp, false);
        if (room <= 0.0) continue;
        const double take = std::min(room, deficit / coords[i].c);
        alpha[i] += take;
        deficit -= take * coords[i].c;
      }
    }
    return objective_at(alpha);
  }
  // All coordinates capped; the whole box point alpha = 1 is the answer.
  std::vector<double> alpha(coords.size(), 1.0);
  return objective_at(alpha);
}

StrengthReport approx_ratio(const SeparableInstance& inst,
                            const LinearObjective& obj) {
  StrengthReport report;
  report.z_l = z_relax(inst, obj);
  report.z_star = z_star(inst, obj);
  report.ratio = (report.z_l == 0.0 && report.z_star == 0.0)
                     ? 1.0
                     : report.z_star / report.z_l;
  return report;
}

}  // namespace bilift
