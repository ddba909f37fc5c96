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
// Problem data for one separable bipartite bilinear constraint
//
//   sum_i a_i x_i y_i >= d,   (x, y) in [0,1]^{2n},
//
// together with minimal-cover detection and the search for minimal-cover
// yielding partitions (I, J0, J1).

#ifndef BILIFT_INSTANCE_HPP_
#define BILIFT_INSTANCE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "bilift/common.hpp"
#include "bilift/point.hpp"

namespace bilift {

struct SeparableInstance {
  std::vector<double> a;
  double d = 0.0;

  int n() const { return static_cast<int>(a.size()); }

  // sum_i a_i x_i y_i - d at a box point.
  double slack(std::span<const double> x, std::span<const double> y) const;

  PointPair make_point(std::vector<double> x, std::vector<double> y) const;
};

// A split of [n] into index sets I (the cover), J0 (pairs fixed at 0) and
// J1 (pairs fixed at 1), with the sign-split subsets and the restricted
// right-hand side d_lambda = d - sum_{i in J1} a_i. Indices are 0-based and
// kept sorted. Coefficients equal to zero are classified into the "plus"
// subsets by convention.
struct Partition {
  std::vector<int> I;
  std::vector<int> J0;
  std::vector<int> J1;
  std::vector<int> J0plus, J0minus;
  std::vector<int> J1plus, J1minus;
  double d_lambda = 0.0;

  // Validates that (I, J0, J1) is a disjoint cover of [n] with I nonempty,
  // then fills the sign splits and d_lambda. Throws PreconditionError.
  static Partition make(const SeparableInstance& inst, std::vector<int> I,
                        std::vector<int> J0, std::vector<int> J1);

  // I = [n], J0 = J1 = empty.
  static Partition trivial(const SeparableInstance& inst);
};

// Derived quantities of a minimal cover: the excess delta, the per-index
// complements d_i = a_i - delta, the strict set {i : a_i > delta}, the
// smallest strict coefficient's index i0, and the two slopes of the
// subadditive bound.
struct CoverContext {
  std::vector<int> I;         // sorted original indices
  std::vector<double> a_I;    // aligned with I
  double d_lambda = 0.0;
  double delta = 0.0;
  std::vector<double> d_i;    // aligned with I, d_i = a_i - delta
  std::vector<int> i_strict;  // original indices with a_i > delta
  std::optional<int> i0;      // argmin a_i over i_strict, lowest-index tie
  double a_i0 = 0.0;          // valid when i0 is set
  double d_i0 = 0.0;
  double l_plus = 0.0;
  double l_minus = 0.0;
};

// True iff a_sub forms a minimal cover of d: all entries and d positive,
// the total exceeds d, and every proper subset total is at most d
// (equivalently total - min <= d). Comparisons are exact; eps_cover, when
// positive, relaxes only the proper-subset side to absorb noisy user data.
bool is_minimal_cover(std::span<const double> a_sub, double d,
                      double eps_cover = 0.0);

// Builds the CoverContext for a partition. Throws NotMinimalCoverError when
// the coefficients on I do not form a minimal cover of d_lambda.
CoverContext cover_context(const SeparableInstance& inst,
                           const Partition& partition);

enum class CoverSearchStatus {
  kFound,
  kCertificate,   // exhaustive search proved no partition exists
  kInfeasible,    // sum of positive coefficients below d, the set is empty
  kCapExceeded,   // too many nonzero coefficients and the heuristic failed
};

struct NoCoverCertificate {
  int nonzero_count = 0;
  std::int64_t subsets_searched = 0;
  bool exhaustive = false;
};

struct CoverSearchResult {
  CoverSearchStatus status = CoverSearchStatus::kCertificate;
  std::vector<Partition> partitions;  // all found, ordered by (J1, I) lex
  std::optional<NoCoverCertificate> certificate;
};

// Searches for minimal-cover yielding partitions. Candidate J1 sets range
// over subsets of the nonzero-coefficient indices; for each candidate the
// remaining positive indices are scanned in decreasing coefficient order and
// I grows greedily until its total exceeds d_lambda, which by construction
// yields a minimal cover whenever one exists for that J1. Indices left over
// go to J0. Above `exhaustive_cap` nonzero indices a bounded heuristic runs
// instead and failure is reported as kCapExceeded, never as a certificate.
CoverSearchResult find_cover_partitions(const SeparableInstance& inst,
                                        int exhaustive_cap = 20);

// Same search, but keeps only the first partition in (J1, I) lex order.
CoverSearchResult find_cover_partition(const SeparableInstance& inst,
                                       int exhaustive_cap = 20);

}  // namespace bilift

#endif  // BILIFT_INSTANCE_HPP_
