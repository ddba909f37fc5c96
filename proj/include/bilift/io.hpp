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
// JSON wire formats. Index sets are 1-based in files and 0-based in memory;
// writers rely on the serializer's round-trip double formatting.

#ifndef BILIFT_IO_HPP_
#define BILIFT_IO_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "bilift/instance.hpp"
#include "bilift/lifted_cut.hpp"
#include "bilift/seed_cut.hpp"
#include "bilift/seq_lifting.hpp"
#include "bilift/verify.hpp"

namespace bilift {

using json = nlohmann::ordered_json;

json load_json_file(const std::string& path);  // throws ParseError

struct ParsedInstance {
  SeparableInstance instance;
  std::optional<Partition> partition;
};

// {"a":[...], "d": real, "partition": {"I":[...],"J0":[...],"J1":[...]}? }
ParsedInstance instance_from_json(const json& j);
json instance_to_json(const SeparableInstance& inst,
                      const Partition* partition = nullptr);

// {"type":"bilinear_cover","I":[...],"coeffs":[...],"rhs":-1.0,
//  "a":[...],"d_i":[...]}; the lifted form adds d_lambda, delta, the two
// slopes and a "gammas" array of {"i","class","a"} records.
json cut_to_json(const SeedCut& cut);
json cut_to_json(const LiftedCut& cut, const CoverContext& cover);
SeedCut seed_cut_from_json(const json& j);
LiftedCut lifted_cut_from_json(const json& j);

// Any cut file accepted by the verify command, reduced to an evaluator.
struct LoadedCut {
  CutEvaluator evaluator;
  std::string kind;  // "bilinear_cover" or "lifted_bilinear_cover"
};
LoadedCut cut_evaluator_from_json(const json& j);

// {"p":[...], "q":[...]}
LinearObjective objective_from_json(const json& j, int n);

json validity_report_to_json(const ValidityReport& report);
json strength_report_to_json(const StrengthReport& report);
json lift_result_to_json(const LiftResult& result);
json certificate_to_json(const TwoPointCertificate& cert);

struct ParsedSeqLift {
  BipartiteInstance instance;
  SeedInequality seed;
  int k = 0;  // x-side index after any transposition
};

// {"Q":[[...]],"a":[...],"b":[...],"c":...,
//  "fix":{"x":[null|value,...],"y":[...]},
//  "k": int | {"side":"x"|"y","index":int},
//  "seed": {"type":"sqrt_xy","i":..,"j":..,"rhs":..}
//        | {"type":"linear","px":[...],"qy":[...],"rhs":..}}
// Free coordinates are the nulls in "fix". A y-side k transposes the
// instance so lifting always works on the x side.
ParsedSeqLift seqlift_from_json(const json& j);

}  // namespace bilift

#endif  // BILIFT_IO_HPP_
