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

#include "bilift/seq_lifting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bilift {

double BipartiteInstance::constraint_lhs(std::span<const double> x,
                                         std::span<const double> y) const {
  double v = 0.0;
  for (int i = 0; i < m; ++i) {
    double row = a[i];
    for (int j = 0; j < n; ++j) row += at(i, j) * y[j];
    v += row * x[i];
  }
  for (int j = 0; j < n; ++j) v += b[j] * y[j];
  return v;
}

BipartiteInstance BipartiteInstance::from_separable(
    const SeparableInstance& inst) {
  BipartiteInstance out;
  out.m = out.n = inst.n();
  out.q.assign(static_cast<std::size_t>(out.m) * out.n, 0.0);
  for (int i = 0; i < out.m; ++i)
    out.q[static_cast<std::size_t>(i) * out.n + i] = inst.a[i];
  out.a.assign(out.m, 0.0);
  out.b.assign(out.n, 0.0);
  out.c = inst.d;
  return out;
}

BipartiteInstance BipartiteInstance::transposed() const {
  BipartiteInstance out;
  out.m = n;
  out.n = m;
  out.q.assign(q.size(), 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      out.q[static_cast<std::size_t>(j) * m + i] = at(i, j);
  out.a = b;
  out.b = a;
  out.c = c;
  return out;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// All-but-one-binary structure of the free pairs: a free x index (or -1),
// a free y index (or -1), and binary assignments for the remaining free
// coordinates packed into bits_x / bits_y.
struct Structure {
  int xi = -1;  // original x index left free, -1 when C is empty
  int yj = -1;
  std::uint64_t bits_x = 0;
  std::uint64_t bits_y = 0;
};

struct Workspace {
  std::vector<double> x, y;      // full coordinate vectors
  std::vector<double> hx, hy;    // free coordinates gathered in C / D order
};

class Lifter {
 public:
  Lifter(const BipartiteInstance& inst, const SeedInequality& seed, int k,
         const LiftOptions& opt)
      : inst_(inst), seed_(seed), k_(k), opt_(opt) {
    structures_ = build_structures();
  }

  const std::vector<Structure>& structures() const { return structures_; }

  // Fills ws with the structure's binary assignment, the fixing values and
  // x_k = xhat. Free slots are left as-is and set per candidate.
  void fill(const Structure& s, double xhat, Workspace& ws) const {
    ws.x.assign(seed_.fixed_x.begin(), seed_.fixed_x.end());
    ws.y.assign(seed_.fixed_y.begin(), seed_.fixed_y.end());
    ws.x[k_] = xhat;
    int bit = 0;
    for (int idx : seed_.free_x) {
      if (idx == s.xi) continue;
      ws.x[idx] = static_cast<double>(s.bits_x >> bit & 1);
      ++bit;
    }
    bit = 0;
    for (int idx : seed_.free_y) {
      if (idx == s.yj) continue;
      ws.y[idx] = static_cast<double>(s.bits_y >> bit & 1);
      ++bit;
    }
  }

  // Constraint restricted to the structure:
  //   qc * x_i y_j + px * x_i + (py0 + py1 * xhat) * y_j >= r0 + r1 * xhat.
  struct Restricted {
    double qc = 0.0;
    double px = 0.0;
    double py0 = 0.0, py1 = 0.0;
    double r0 = 0.0, r1 = 0.0;
  };

  Restricted restrict(const Structure& s, Workspace& ws) const {
    fill(s, 0.0, ws);
    if (s.xi >= 0) ws.x[s.xi] = 0.0;
    if (s.yj >= 0) ws.y[s.yj] = 0.0;
    Restricted r;
    // Base constant with xhat = 0 and free coordinates at 0.
    const double base0 = inst_.constraint_lhs(ws.x, ws.y);
    ws.x[k_] = 1.0;
    const double base1 = inst_.constraint_lhs(ws.x, ws.y);
    ws.x[k_] = 0.0;
    r.r0 = inst_.c - base0;
    r.r1 = -(base1 - base0);
    if (s.xi >= 0) {
      r.px = inst_.a[s.xi];
      for (int j = 0; j < inst_.n; ++j)
        if (j != s.yj) r.px += inst_.at(s.xi, j) * ws.y[j];
    }
    if (s.yj >= 0) {
      r.py0 = inst_.b[s.yj];
      for (int i = 0; i < inst_.m; ++i)
        if (i != s.xi && i != k_) r.py0 += inst_.at(i, s.yj) * ws.x[i];
      r.py1 = inst_.at(k_, s.yj);
    }
    if (s.xi >= 0 && s.yj >= 0) r.qc = inst_.at(s.xi, s.yj);
    return r;
  }

  double objective(const Structure& s, double xhat, double vx, double vy,
                   Workspace& ws) const {
    fill(s, xhat, ws);
    if (s.xi >= 0) ws.x[s.xi] = vx;
    if (s.yj >= 0) ws.y[s.yj] = vy;
    ws.hx.clear();
    ws.hy.clear();
    for (int idx : seed_.free_x) ws.hx.push_back(ws.x[idx]);
    for (int idx : seed_.free_y) ws.hy.push_back(ws.y[idx]);
    return seed_.rhs - seed_.h(ws.hx, ws.hy);
  }

  // Max of (rhs - h) over the structure at a given xhat; -inf if empty.
  double structure_max(const Structure& s, const Restricted& r, double xhat,
                       Workspace& ws) const {
    const double py = r.py0 + r.py1 * xhat;
    const double rc = r.r0 + r.r1 * xhat;
    const double feas_tol = 1e-10 * std::max(1.0, std::abs(rc));
    double best = -kInf;
    auto consider = [&](double vx, double vy) {
      const double lhs = r.qc * vx * vy + r.px * vx + py * vy;
      if (lhs < rc - feas_tol) return;
      best = std::max(best, objective(s, xhat, vx, vy, ws));
    };
    if (s.xi < 0 && s.yj < 0) {
      consider(0.0, 0.0);
      return best;
    }
    if (s.yj < 0) {
      consider(0.0, 0.0);
      consider(1.0, 0.0);
      if (r.px != 0.0) {
        const double cr = rc / r.px;
        if (cr > 0.0 && cr < 1.0) consider(cr, 0.0);
      }
      return best;
    }
    if (s.xi < 0) {
      consider(0.0, 0.0);
      consider(0.0, 1.0);
      if (py != 0.0) {
        const double cr = rc / py;
        if (cr > 0.0 && cr < 1.0) consider(0.0, cr);
      }
      return best;
    }
    consider(0.0, 0.0);
    consider(0.0, 1.0);
    consider(1.0, 0.0);
    consider(1.0, 1.0);
    // Arc where the restricted constraint is tight, swept from both axes.
    const int K = std::max(opt_.arc_samples, 2);
    for (int g = 0; g < K; ++g) {
      const double t = static_cast<double>(g) / (K - 1);
      const double den_y = r.qc * t + py;
      if (std::abs(den_y) > 1e-14) {
        const double vy = (rc - r.px * t) / den_y;
        if (vy >= -1e-12 && vy <= 1.0 + 1e-12)
          consider(t, std::clamp(vy, 0.0, 1.0));
      }
      const double den_x = r.qc * t + r.px;
      if (std::abs(den_x) > 1e-14) {
        const double vx = (rc - py * t) / den_x;
        if (vx >= -1e-12 && vx <= 1.0 + 1e-12)
          consider(std::clamp(vx, 0.0, 1.0), t);
      }
    }
    return best;
  }

  double restriction_max(double xhat, Workspace& ws) const {
    double best = -kInf;
    for (std::size_t s = 0; s < structures_.size(); ++s) {
      const double v =
          structure_max(structures_[s], restricted_[s], xhat, ws);
      best = std::max(best, v);
    }
    return best;
  }

  void cache_restrictions(Workspace& ws) {
    restricted_.clear();
    restricted_.reserve(structures_.size());
    for (const Structure& s : structures_)
      restricted_.push_back(restrict(s, ws));
  }

  // Grid values of the lifted variable where some structure's constraint
  // arc crosses a box corner; the supremum often sits exactly there.
  std::vector<double> feasibility_breakpoints() const {
    std::vector<double> bps;
    for (const Restricted& r : restricted_) {
      const double cx[4] = {0.0, 0.0, 1.0, 1.0};
      const double cy[4] = {0.0, 1.0, 0.0, 1.0};
      for (int c = 0; c < 4; ++c) {
        const double base =
            r.qc * cx[c] * cy[c] + r.px * cx[c] + r.py0 * cy[c] - r.r0;
        const double slope = r.py1 * cy[c] - r.r1;
        if (slope == 0.0) continue;
        const double root = -base / slope;
        if (root >= 1e-9 && root <= 1.0) bps.push_back(root);
      }
    }
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    return bps;
  }

 private:
  std::vector<Structure> build_structures() const {
    const int nc = static_cast<int>(seed_.free_x.size());
    const int nd = static_cast<int>(seed_.free_y.size());
    std::vector<Structure> out;
    auto push_all = [&](int xi, int yj) {
      const int bx = nc - (xi >= 0 ? 1 : 0);
      const int by = nd - (yj >= 0 ? 1 : 0);
      const std::uint64_t lim_x = std::uint64_t{1} << bx;
      const std::uint64_t lim_y = std::uint64_t{1} << by;
      if (lim_x * lim_y > static_cast<std::uint64_t>(opt_.pattern_cap))
        throw CapExceededError("lift_coefficient: too many free coordinates");
      for (std::uint64_t mx = 0; mx < lim_x; ++mx)
        for (std::uint64_t my = 0; my < lim_y; ++my)
          out.push_back({xi, yj, mx, my});
    };
    if (nc == 0 && nd == 0) {
      out.push_back({-1, -1, 0, 0});
    } else if (nc == 0) {
      for (int j : seed_.free_y) push_all(-1, j);
    } else if (nd == 0) {
      for (int i : seed_.free_x) push_all(i, -1);
    } else {
      for (int i : seed_.free_x)
        for (int j : seed_.free_y) push_all(i, j);
    }
    return out;
  }

  const BipartiteInstance& inst_;
  const SeedInequality& seed_;
  int k_;
  LiftOptions opt_;
  std::vector<Structure> structures_;
  std::vector<Restricted> restricted_;
};

void check_seed_concavity(const SeedInequality& seed, int samples,
                          std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  const std::size_t nc = seed.free_x.size();
  const std::size_t nd = seed.free_y.size();
  std::vector<double> x1(nc), y1(nd), x2(nc), y2(nd), xm(nc), ym(nd);
  for (int s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < nc; ++i) {
      x1[i] = rng.uniform();
      x2[i] = rng.uniform();
      xm[i] = 0.5 * (x1[i] + x2[i]);
    }
    for (std::size_t j = 0; j < nd; ++j) {
      y1[j] = rng.uniform();
      y2[j] = rng.uniform();
      ym[j] = 0.5 * (y1[j] + y2[j]);
    }
    const double mid = seed.h(xm, ym);
    const double avg = 0.5 * (seed.h(x1, y1) + seed.h(x2, y2));
    if (mid < avg - 1e-9)
      throw PreconditionError("seed evaluator failed its concavity check");
  }
}

void validate_lift_inputs(const BipartiteInstance& inst,
                          const SeedInequality& seed, int k) {
  if (static_cast<int>(seed.fixed_x.size()) != inst.m ||
      static_cast<int>(seed.fixed_y.size()) != inst.n)
    throw PreconditionError("seed fixing vectors must match instance shape");
  if (k < 0 || k >= inst.m)
    throw PreconditionError("lifted index out of range");
  for (int idx : seed.free_x)
    if (idx == k) throw PreconditionError("lifted index must be fixed in the seed");
  // Every coordinate fixed by the seed, other than the one being lifted,
  // must sit at a bound.
  std::vector<char> free_mark_x(inst.m, 0), free_mark_y(inst.n, 0);
  for (int idx : seed.free_x) free_mark_x.at(idx) = 1;
  for (int idx : seed.free_y) free_mark_y.at(idx) = 1;
  for (int i = 0; i < inst.m; ++i) {
    if (free_mark_x[i] || i == k) continue;
    if (seed.fixed_x[i] != 0.0 && seed.fixed_x[i] != 1.0)
      throw PreconditionError("fixed coordinates must sit at a bound");
  }
  for (int j = 0; j < inst.n; ++j) {
    if (free_mark_y[j]) continue;
    if (seed.fixed_y[j] != 0.0 && seed.fixed_y[j] != 1.0)
      throw PreconditionError("fixed coordinates must sit at a bound");
  }
}

BipartiteInstance complement_x(const BipartiteInstance& inst, int k) {
  BipartiteInstance out = inst;
  out.c = inst.c - inst.a[k];
  out.a[k] = -inst.a[k];
  for (int j = 0; j < inst.n; ++j) {
    out.b[j] += inst.at(k, j);
    out.q[static_cast<std::size_t>(k) * inst.n + j] = -inst.at(k, j);
  }
  return out;
}

}  // namespace

LiftResult lift_coefficient(const BipartiteInstance& inst,
                            const SeedInequality& seed, int k,
                            const LiftOptions& options) {
  validate_lift_inputs(inst, seed, k);
  const double fix = seed.fixed_x[k];
  if (fix != 0.0 && fix != 1.0)
    throw PreconditionError("lift_coefficient: fixing value must be 0 or 1");
  if (fix == 1.0) {
    // Complement the lifted variable and map the coefficient back.
    SeedInequality flipped = seed;
    flipped.fixed_x[k] = 0.0;
    LiftResult r = lift_coefficient(complement_x(inst, k), flipped, k, options);
    r.estimate = -r.estimate;
    r.coefficient = -r.coefficient;
    return r;
  }

  check_seed_concavity(seed, options.concavity_samples, options.rng_seed);
  Lifter lifter(inst, seed, k, options);
  Workspace ws;
  lifter.cache_restrictions(ws);

  // The seed restriction itself (x_k at its fixing value) must be nonempty.
  if (lifter.restriction_max(0.0, ws) == -kInf)
    throw PreconditionError("lift_coefficient: seed restriction is empty");

  std::vector<double> grid;
  const int g = std::max(options.grid, 2);
  for (int i = 0; i < g; ++i) {
    const double t = static_cast<double>(i) / (g - 1);
    grid.push_back(std::pow(options.xhat_min, 1.0 - t));
  }
  for (double bp : lifter.feasibility_breakpoints()) {
    grid.push_back(bp);
    if (bp - 1e-9 > 0.0) grid.push_back(bp - 1e-9);
    if (bp + 1e-9 <= 1.0) grid.push_back(bp + 1e-9);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  LiftResult result;
  result.grid_points = static_cast<int>(grid.size());
  double sup = -kInf;
  std::vector<double> values(grid.size(), -kInf);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = lifter.restriction_max(grid[i], ws);
    if (values[i] == -kInf) continue;
    sup = std::max(sup, values[i] / grid[i]);
  }
  if (sup == -kInf) sup = 0.0;  // x_k cannot move off its bound
  result.estimate = sup;
  result.margin = std::abs(sup) * options.margin_rel + options.margin_abs;
  result.coefficient = sup + result.margin;

  // Validation of h + coefficient * x_k >= rhs over the one-variable-unfixed
  // restriction: grid-tight structures, binary corners, random samples.
  double min_slack = kInf;
  std::int64_t checked = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] == -kInf) continue;
    min_slack = std::min(min_slack, result.coefficient * grid[i] - values[i]);
    ++checked;
  }
  const std::size_t free_count = seed.free_x.size() + seed.free_y.size() + 1;
  Rng rng(options.rng_seed + 1);
  std::vector<double> x(seed.fixed_x), y(seed.fixed_y);
  auto consider_point = [&](std::span<const double> px,
                            std::span<const double> py) {
    if (inst.constraint_lhs(px, py) < inst.c) return;
    std::vector<double> hx, hy;
    for (int idx : seed.free_x) hx.push_back(px[idx]);
    for (int idx : seed.free_y) hy.push_back(py[idx]);
    const double slack =
        seed.h(hx, hy) + result.coefficient * px[k] - seed.rhs;
    ++checked;
    min_slack = std::min(min_slack, slack);
  };
  if (free_count <= 20) {
    const std::uint64_t lim = std::uint64_t{1} << free_count;
    for (std::uint64_t mask = 0; mask < lim; ++mask) {
      int bit = 0;
      for (int idx : seed.free_x) x[idx] = static_cast<double>(mask >> bit++ & 1);
      for (int idx : seed.free_y) y[idx] = static_cast<double>(mask >> bit++ & 1);
      x[k] = static_cast<double>(mask >> bit & 1);
      consider_point(x, y);
    }
  }
  for (std::int64_t s = 0; s < options.validation_samples; ++s) {
    for (int idx : seed.free_x) x[idx] = rng.uniform();
    for (int idx : seed.free_y) y[idx] = rng.uniform();
    x[k] = rng.uniform();
    consider_point(x, y);
  }
  result.min_slack = min_slack == kInf ? 0.0 : min_slack;
  result.points_checked = checked;
  result.validated = result.min_slack >= -1e-6;
  return result;
}

std::optional<TwoPointCertificate> nonliftable_certificate(
    const BipartiteInstance& inst, const SeedInequality& seed, int k,
    const CertificateOptions& options) {
  validate_lift_inputs(inst, seed, k);
  const double x_tilde = seed.fixed_x[k];
  if (x_tilde <= 0.0 || x_tilde >= 1.0) return std::nullopt;

  double best_lower = -kInf, best_upper = kInf;
  TwoPointCertificate cert;
  auto consider = [&](const std::vector<double>& px,
                      const std::vector<double>& py) {
    if (inst.constraint_lhs(px, py) < inst.c) return;
    std::vector<double> hx, hy;
    for (int idx : seed.free_x) hx.push_back(px[idx]);
    for (int idx : seed.free_y) hy.push_back(py[idx]);
    const double gap = seed.rhs - seed.h(hx, hy);
    const double dx = px[k] - x_tilde;
    if (dx > 0.0) {
      const double bound = gap / dx;
      if (bound > best_lower) {
        best_lower = bound;
        cert.lower_x = px;
        cert.lower_y = py;
      }
    } else if (dx < 0.0) {
      const double bound = gap / dx;
      if (bound < best_upper) {
        best_upper = bound;
        cert.upper_x = px;
        cert.upper_y = py;
      }
    }
  };

  std::vector<double> x(seed.fixed_x), y(seed.fixed_y);
  const std::size_t free_count = seed.free_x.size() + seed.free_y.size() + 1;
  if (free_count <= 20 &&
      (std::uint64_t{1} << free_count) <=
          static_cast<std::uint64_t>(options.corner_cap)) {
    const std::uint64_t lim = std::uint64_t{1} << free_count;
    for (std::uint64_t mask = 0; mask < lim; ++mask) {
      int bit = 0;
      for (int idx : seed.free_x) x[idx] = static_cast<double>(mask >> bit++ & 1);
      for (int idx : seed.free_y) y[idx] = static_cast<double>(mask >> bit++ & 1);
      x[k] = static_cast<double>(mask >> bit & 1);
      consider(x, y);
    }
  }
  auto finish = [&]() -> std::optional<TwoPointCertificate> {
    if (!(best_lower > best_upper)) return std::nullopt;
    cert.lower_bound = best_lower;
    cert.upper_bound = best_upper;
    // Witnesses must be feasible by direct substitution.
    if (inst.constraint_lhs(cert.lower_x, cert.lower_y) < inst.c ||
        inst.constraint_lhs(cert.upper_x, cert.upper_y) < inst.c)
      return std::nullopt;
    return cert;
  };
  if (auto c = finish()) return c;

  Rng rng(options.rng_seed);
  for (std::int64_t s = 0; s < options.samples; ++s) {
    for (int idx : seed.free_x) x[idx] = rng.uniform();
    for (int idx : seed.free_y) y[idx] = rng.uniform();
    x[k] = rng.uniform();
    consider(x, y);
  }
  return finish();
}

}  // namespace bilift
