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

#include "bilift/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <thread>
#include <utility>

namespace bilift {

int worker_threads() {
  if (const char* env = std::getenv("BILIFT_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min<unsigned>(hw == 0 ? 1 : hw, 4));
}

double SeparableInstance::slack(std::span<const double> x,
                                std::span<const double> y) const {
  double lhs = 0.0;
  for (int i = 0; i < n(); ++i) lhs += a[i] * x[i] * y[i];
  return lhs - d;
}

PointPair SeparableInstance::make_point(std::vector<double> x,
                                        std::vector<double> y) const {
  PointPair p{std::move(x), std::move(y), 0.0};
  p.slack = slack(p.x, p.y);
  return p;
}

bool is_minimal_cover(std::span<const double> a_sub, double d,
                      double eps_cover) {
  if (a_sub.empty()) return false;
  if (!(d > 0.0)) return false;
  double total = 0.0;
  double min_a = std::numeric_limits<double>::infinity();
  for (double v : a_sub) {
    if (!std::isfinite(v) || !(v > 0.0)) return false;
    total += v;
    min_a = std::min(min_a, v);
  }
  if (!(total > d)) return false;
  // Every proper subset total is at most d iff the largest one is.
  return total - min_a <= d + eps_cover;
}

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Partition Partition::make(const SeparableInstance& inst, std::vector<int> I,
                          std::vector<int> J0, std::vector<int> J1) {
  Partition p;
  p.I = sorted(std::move(I));
  p.J0 = sorted(std::move(J0));
  p.J1 = sorted(std::move(J1));
  if (p.I.empty()) throw PreconditionError("partition: I must be nonempty");
  std::vector<char> seen(inst.a.size(), 0);
  auto mark = [&](const std::vector<int>& set, const char* name) {
    for (int i : set) {
      if (i < 0 || i >= inst.n())
        throw PreconditionError(std::string("partition: index out of range in ") + name);
      if (seen[i]++)
        throw PreconditionError("partition: sets are not disjoint");
    }
  };
  mark(p.I, "I");
  mark(p.J0, "J0");
  mark(p.J1, "J1");
  for (int i = 0; i < inst.n(); ++i)
    if (!seen[i]) throw PreconditionError("partition: sets do not cover [n]");
  for (int i : p.J0) (inst.a[i] < 0.0 ? p.J0minus : p.J0plus).push_back(i);
  for (int i : p.J1) (inst.a[i] < 0.0 ? p.J1minus : p.J1plus).push_back(i);
  double s = 0.0;
  for (int i : p.J1) s += inst.a[i];
  p.d_lambda = inst.d - s;
  return p;
}

Partition Partition::trivial(const SeparableInstance& inst) {
  std::vector<int> I(inst.a.size());
  std::iota(I.begin(), I.end(), 0);
  return Partition::make(inst, std::move(I), {}, {});
}

CoverContext cover_context(const SeparableInstance& inst,
                           const Partition& partition) {
  CoverContext ctx;
  ctx.I = partition.I;
  ctx.a_I.reserve(ctx.I.size());
  for (int i : ctx.I) ctx.a_I.push_back(inst.a[i]);
  double s = 0.0;
  for (int i : partition.J1) s += inst.a[i];
  ctx.d_lambda = inst.d - s;
  if (!is_minimal_cover(ctx.a_I, ctx.d_lambda))
    throw NotMinimalCoverError(
        "cover_context: coefficients on I are not a minimal cover of d_lambda");
  double total = std::accumulate(ctx.a_I.begin(), ctx.a_I.end(), 0.0);
  ctx.delta = total - ctx.d_lambda;
  ctx.d_i.reserve(ctx.I.size());
  for (double ai : ctx.a_I) ctx.d_i.push_back(ai - ctx.delta);
  for (std::size_t k = 0; k < ctx.I.size(); ++k) {
    if (ctx.a_I[k] > ctx.delta) ctx.i_strict.push_back(ctx.I[k]);
  }
  ctx.l_minus = 1.0 / ctx.delta;
  if (!ctx.i_strict.empty()) {
    std::size_t best = 0;
    double best_a = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < ctx.I.size(); ++k) {
      if (ctx.a_I[k] > ctx.delta && ctx.a_I[k] < best_a) {
        best_a = ctx.a_I[k];
        best = k;
      }
    }
    ctx.i0 = ctx.I[best];
    ctx.a_i0 = ctx.a_I[best];
    ctx.d_i0 = ctx.d_i[best];
    ctx.l_plus = (std::sqrt(ctx.a_i0) + std::sqrt(ctx.d_i0)) /
                 (ctx.delta * std::sqrt(ctx.d_i0));
  } else {
    ctx.l_plus = ctx.l_minus;
  }
  return ctx;
}

namespace {

// Greedy cover attempt for one candidate J1 (given as a bitmask over the
// nonzero index list). Scanning remaining positive coefficients in
// decreasing order and stopping at the first time the running total exceeds
// d_lambda guarantees that every proper subset total stays at most d_lambda,
// so the result is a minimal cover whenever the scan succeeds.
std::optional<Partition> try_j1(const SeparableInstance& inst,
                                const std::vector<int>& nonzero,
                                std::uint64_t mask) {
  double d_lambda = inst.d;
  std::vector<char> in_j1(inst.a.size(), 0);
  for (std::size_t b = 0; b < nonzero.size(); ++b) {
    if (mask >> b & 1) {
      in_j1[nonzero[b]] = 1;
      d_lambda -= inst.a[nonzero[b]];
    }
  }
  if (!(d_lambda > 0.0)) return std::nullopt;
  std::vector<int> avail;
  for (int i = 0; i < inst.n(); ++i)
    if (!in_j1[i] && inst.a[i] > 0.0) avail.push_back(i);
  std::sort(avail.begin(), avail.end(), [&](int lhs, int rhs) {
    if (inst.a[lhs] != inst.a[rhs]) return inst.a[lhs] > inst.a[rhs];
    return lhs < rhs;
  });
  std::vector<int> I;
  double total = 0.0;
  for (int i : avail) {
    I.push_back(i);
    total += inst.a[i];
    if (total > d_lambda) break;
  }
  if (!(total > d_lambda)) return std::nullopt;
  std::vector<double> a_I;
  for (int i : I) a_I.push_back(inst.a[i]);
  if (!is_minimal_cover(a_I, d_lambda)) return std::nullopt;
  std::vector<int> J0, J1;
  std::vector<char> in_i(inst.a.size(), 0);
  for (int i : I) in_i[i] = 1;
  for (int i = 0; i < inst.n(); ++i) {
    if (in_j1[i])
      J1.push_back(i);
    else if (!in_i[i])
      J0.push_back(i);
  }
  return Partition::make(inst, std::move(I), std::move(J0), std::move(J1));
}

bool partition_less(const Partition& lhs, const Partition& rhs) {
  if (lhs.J1 != rhs.J1) return lhs.J1 < rhs.J1;
  return lhs.I < rhs.I;
}

}  // namespace

CoverSearchResult find_cover_partitions(const SeparableInstance& inst,
                                        int exhaustive_cap) {
  CoverSearchResult result;
  double positive_total = 0.0;
  for (double v : inst.a) positive_total += std::max(v, 0.0);
  if (positive_total < inst.d) {
    result.status = CoverSearchStatus::kInfeasible;
    return result;
  }
  std::vector<int> nonzero;
  for (int i = 0; i < inst.n(); ++i)
    if (inst.a[i] != 0.0) nonzero.push_back(i);
  const int k = static_cast<int>(nonzero.size());

  if (k <= exhaustive_cap) {
    const std::uint64_t limit = std::uint64_t{1} << k;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      if (auto p = try_j1(inst, nonzero, mask))
        result.partitions.push_back(std::move(*p));
    }
    if (result.partitions.empty()) {
      result.status = CoverSearchStatus::kCertificate;
      result.certificate =
          NoCoverCertificate{k, static_cast<std::int64_t>(limit), true};
      return result;
    }
    std::sort(result.partitions.begin(), result.partitions.end(),
              partition_less);
    result.status = CoverSearchStatus::kFound;
    return result;
  }

  // Heuristic pass above the cap: empty set, singletons, then a bounded
  // batch of pseudo-random masks. A miss here proves nothing.
  std::vector<std::uint64_t> masks;
  masks.push_back(0);
  for (int b = 0; b < k && b < 63; ++b) masks.push_back(std::uint64_t{1} << b);
  Rng rng(0xB117B117u);
  for (int t = 0; t < 4096; ++t) {
    std::uint64_t m = rng.next();
    if (k < 64) m &= (std::uint64_t{1} << k) - 1;
    masks.push_back(m);
  }
  for (std::uint64_t mask : masks) {
    if (auto p = try_j1(inst, nonzero, mask)) {
      result.partitions.push_back(std::move(*p));
      result.status = CoverSearchStatus::kFound;
      return result;
    }
  }
  result.status = CoverSearchStatus::kCapExceeded;
  return result;
}

CoverSearchResult find_cover_partition(const SeparableInstance& inst,
                                       int exhaustive_cap) {
  CoverSearchResult all = find_cover_partitions(inst, exhaustive_cap);
  if (all.status == CoverSearchStatus::kFound && all.partitions.size() > 1)
    all.partitions.resize(1);
  return all;
}

}  // namespace bilift
