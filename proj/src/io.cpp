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

#include "bilift/io.hpp"

#include <cmath>
#include <fstream>
#include <utility>

namespace bilift {

namespace {

std::vector<int> indices_from_json(const json& j, const char* name, int n) {
  std::vector<int> out;
  if (!j.is_array()) throw ParseError(std::string(name) + " must be an array");
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw ParseError(std::string(name) + " must hold integers");
    const int idx = v.get<int>();
    if (idx < 1 || idx > n)
      throw ParseError(std::string(name) + " holds an out-of-range index");
    out.push_back(idx - 1);
  }
  return out;
}

json indices_to_json(const std::vector<int>& v) {
  json out = json::array();
  for (int i : v) out.push_back(i + 1);
  return out;
}

std::vector<double> doubles_from_json(const json& j, const char* name) {
  std::vector<double> out;
  if (!j.is_array()) throw ParseError(std::string(name) + " must be an array");
  for (const auto& v : j) {
    if (!v.is_number()) throw ParseError(std::string(name) + " must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

json point_to_json(const PointPair& p) {
  return json{{"x", p.x}, {"y", p.y}, {"slack", p.slack}};
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

ParsedInstance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("d"))
    throw ParseError("instance requires fields \"a\" and \"d\"");
  ParsedInstance out;
  out.instance.a = doubles_from_json(j.at("a"), "a");
  if (!j.at("d").is_number()) throw ParseError("d must be a number");
  out.instance.d = j.at("d").get<double>();
  if (out.instance.a.empty()) throw ParseError("instance needs n >= 1");
  for (double v : out.instance.a)
    if (!std::isfinite(v)) throw ParseError("coefficients must be finite");
  if (!std::isfinite(out.instance.d)) throw ParseError("d must be finite");
  if (j.contains("partition")) {
    const json& p = j.at("partition");
    const int n = out.instance.n();
    out.partition = Partition::make(
        out.instance, indices_from_json(p.value("I", json::array()), "I", n),
        indices_from_json(p.value("J0", json::array()), "J0", n),
        indices_from_json(p.value("J1", json::array()), "J1", n));
  }
  return out;
}

json instance_to_json(const SeparableInstance& inst,
                      const Partition* partition) {
  json j{{"a", inst.a}, {"d", inst.d}};
  if (partition != nullptr) {
    j["partition"] = json{{"I", indices_to_json(partition->I)},
                          {"J0", indices_to_json(partition->J0)},
                          {"J1", indices_to_json(partition->J1)}};
  }
  return j;
}

json cut_to_json(const SeedCut& cut) {
  return json{{"type", "bilinear_cover"},
              {"I", indices_to_json(cut.index_map)},
              {"coeffs", cut.coeffs},
              {"rhs", cut.rhs},
              {"a", cut.a_I},
              {"d_i", cut.d_I}};
}

json cut_to_json(const LiftedCut& cut, const CoverContext& cover) {
  json j = cut_to_json(cut.seed);
  j["d_lambda"] = cover.d_lambda;
  j["delta"] = cover.delta;
  j["l_plus"] = cover.l_plus;
  j["l_minus"] = cover.l_minus;
  json gammas = json::array();
  for (const GammaTerm& g : cut.gammas) {
    gammas.push_back(json{{"i", g.index + 1},
                          {"class", gamma_class_name(g.cls)},
                          {"a", g.a}});
  }
  j["gammas"] = std::move(gammas);
  return j;
}

SeedCut seed_cut_from_json(const json& j) {
  if (j.value("type", "") != "bilinear_cover")
    throw ParseError("cut type must be \"bilinear_cover\"");
  SeedCut cut;
  cut.coeffs = doubles_from_json(j.at("coeffs"), "coeffs");
  cut.a_I = doubles_from_json(j.at("a"), "a");
  cut.d_I = doubles_from_json(j.at("d_i"), "d_i");
  cut.rhs = j.value("rhs", -1.0);
  const json& I = j.at("I");
  for (const auto& v : I) cut.index_map.push_back(v.get<int>() - 1);
  if (cut.index_map.size() != cut.coeffs.size() ||
      cut.a_I.size() != cut.coeffs.size() || cut.d_I.size() != cut.coeffs.size())
    throw ParseError("cut arrays must have matching lengths");
  return cut;
}

LiftedCut lifted_cut_from_json(const json& j) {
  LiftedCut cut;
  cut.seed = seed_cut_from_json(j);
  if (!j.contains("gammas")) return cut;
  const double l_plus = j.at("l_plus").get<double>();
  const double l_minus = j.at("l_minus").get<double>();
  const double delta = j.at("delta").get<double>();
  for (const auto& g : j.at("gammas")) {
    GammaTerm term;
    term.index = g.at("i").get<int>() - 1;
    term.cls = gamma_class_from_name(g.at("class").get<std::string>());
    term.a = g.at("a").get<double>();
    term.l_plus = l_plus;
    term.l_minus = l_minus;
    term.delta = delta;
    term.big_offset = std::max(l_plus * delta - 1.0, 0.0);
    if (term.cls == GammaClass::kJ1PlusLarge) {
      const double di = term.a - delta;
      term.g_slope = l_plus * std::sqrt(di) * std::sqrt(term.a);
      term.g_at_one = std::max(
          l_plus * std::sqrt(di) * (std::sqrt(term.a) - std::sqrt(di)) - 1.0,
          0.0);
      term.seed_coeff = std::sqrt(term.a) / (std::sqrt(term.a) - std::sqrt(di));
    }
    cut.gammas.push_back(term);
  }
  return cut;
}

LoadedCut cut_evaluator_from_json(const json& j) {
  LoadedCut loaded;
  if (j.contains("gammas")) {
    LiftedCut cut = lifted_cut_from_json(j);
    loaded.kind = "lifted_bilinear_cover";
    loaded.evaluator = [cut](const PointPair& p) { return eval_lifted(cut, p); };
  } else {
    SeedCut cut = seed_cut_from_json(j);
    loaded.kind = "bilinear_cover";
    loaded.evaluator = [cut](const PointPair& p) { return eval_seed(cut, p); };
  }
  return loaded;
}

LinearObjective objective_from_json(const json& j, int n) {
  LinearObjective obj;
  obj.p = doubles_from_json(j.at("p"), "p");
  obj.q = doubles_from_json(j.at("q"), "q");
  if (static_cast<int>(obj.p.size()) != n || static_cast<int>(obj.q.size()) != n)
    throw ParseError("objective arrays must have length n");
  return obj;
}

json validity_report_to_json(const ValidityReport& report) {
  return json{{"min_slack", report.min_slack},
              {"violated", report.violated},
              {"points_checked", report.points_checked},
              {"tolerance", report.tolerance},
              {"rng_seed", report.rng_seed},
              {"samples_requested", report.samples_requested},
              {"samples_obtained", report.samples_obtained},
              {"low_acceptance", report.low_acceptance},
              {"witness", point_to_json(report.witness)}};
}

json strength_report_to_json(const StrengthReport& report) {
  return json{{"z_l", report.z_l},
              {"z_star", report.z_star},
              {"ratio", report.ratio}};
}

json lift_result_to_json(const LiftResult& result) {
  return json{{"estimate", result.estimate},
              {"coefficient", result.coefficient},
              {"margin", result.margin},
              {"grid_points", result.grid_points},
              {"min_slack", result.min_slack},
              {"points_checked", result.points_checked},
              {"validated", result.validated}};
}

json certificate_to_json(const TwoPointCertificate& cert) {
  return json{{"certificate", true},
              {"lower_bound", cert.lower_bound},
              {"upper_bound", cert.upper_bound},
              {"lower_witness", json{{"x", cert.lower_x}, {"y", cert.lower_y}}},
              {"upper_witness", json{{"x", cert.upper_x}, {"y", cert.upper_y}}}};
}

ParsedSeqLift seqlift_from_json(const json& j) {
  BipartiteInstance inst;
  const json& Q = j.at("Q");
  if (!Q.is_array() || Q.empty()) throw ParseError("Q must be a nonempty matrix");
  inst.m = static_cast<int>(Q.size());
  inst.n = static_cast<int>(Q.at(0).size());
  if (inst.n < 1) throw ParseError("Q must have at least one column");
  for (const auto& row : Q) {
    const std::vector<double> r = doubles_from_json(row, "Q row");
    if (static_cast<int>(r.size()) != inst.n)
      throw ParseError("Q rows must have equal length");
    inst.q.insert(inst.q.end(), r.begin(), r.end());
  }
  inst.a = doubles_from_json(j.at("a"), "a");
  inst.b = doubles_from_json(j.at("b"), "b");
  inst.c = j.at("c").get<double>();
  if (static_cast<int>(inst.a.size()) != inst.m ||
      static_cast<int>(inst.b.size()) != inst.n)
    throw ParseError("a and b must match the shape of Q");

  const json& fix = j.at("fix");
  auto parse_fix = [](const json& arr, int len, std::vector<int>& free_idx,
                      std::vector<double>& fixed) {
    if (static_cast<int>(arr.size()) != len)
      throw ParseError("fix arrays must match the instance shape");
    fixed.assign(len, 0.0);
    for (int i = 0; i < len; ++i) {
      if (arr.at(i).is_null())
        free_idx.push_back(i);
      else
        fixed[i] = arr.at(i).get<double>();
    }
  };
  SeedInequality seed;
  parse_fix(fix.at("x"), inst.m, seed.free_x, seed.fixed_x);
  parse_fix(fix.at("y"), inst.n, seed.free_y, seed.fixed_y);

  bool y_side = false;
  int k = 0;
  const json& kj = j.at("k");
  if (kj.is_object()) {
    y_side = kj.value("side", "x") == "y";
    k = kj.at("index").get<int>() - 1;
  } else {
    k = kj.get<int>() - 1;
  }

  const json& sj = j.at("seed");
  const std::string type = sj.at("type").get<std::string>();
  seed.rhs = sj.at("rhs").get<double>();
  if (type == "sqrt_xy") {
    const int si = sj.at("i").get<int>() - 1;
    const int sjy = sj.at("j").get<int>() - 1;
    int ci = -1, dj = -1;
    for (std::size_t t = 0; t < seed.free_x.size(); ++t)
      if (seed.free_x[t] == si) ci = static_cast<int>(t);
    for (std::size_t t = 0; t < seed.free_y.size(); ++t)
      if (seed.free_y[t] == sjy) dj = static_cast<int>(t);
    if (ci < 0 || dj < 0)
      throw ParseError("sqrt_xy seed must reference free coordinates");
    seed.h = [ci, dj](std::span<const double> xs, std::span<const double> ys) {
      return std::sqrt(std::max(xs[ci] * ys[dj], 0.0));
    };
  } else if (type == "linear") {
    std::vector<double> px = doubles_from_json(sj.at("px"), "px");
    std::vector<double> qy = doubles_from_json(sj.at("qy"), "qy");
    if (static_cast<int>(px.size()) != inst.m ||
        static_cast<int>(qy.size()) != inst.n)
      throw ParseError("linear seed arrays must match the instance shape");
    std::vector<double> cx, cy;
    for (int idx : seed.free_x) cx.push_back(px[idx]);
    for (int idx : seed.free_y) cy.push_back(qy[idx]);
    seed.h = [cx, cy](std::span<const double> xs, std::span<const double> ys) {
      double v = 0.0;
      for (std::size_t i = 0; i < cx.size(); ++i) v += cx[i] * xs[i];
      for (std::size_t i = 0; i < cy.size(); ++i) v += cy[i] * ys[i];
      return v;
    };
  } else {
    throw ParseError("unknown seed type: " + type);
  }

  ParsedSeqLift out;
  if (y_side) {
    out.instance = inst.transposed();
    out.seed.free_x = seed.free_y;
    out.seed.free_y = seed.free_x;
    out.seed.fixed_x = seed.fixed_y;
    out.seed.fixed_y = seed.fixed_x;
    out.seed.rhs = seed.rhs;
    auto h = seed.h;
    out.seed.h = [h](std::span<const double> xs, std::span<const double> ys) {
      return h(ys, xs);
    };
  } else {
    out.instance = std::move(inst);
    out.seed = std::move(seed);
  }
  out.k = k;
  return out;
}

}  // namespace bilift
