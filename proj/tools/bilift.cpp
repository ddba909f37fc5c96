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
// Command-line front end. Exit codes: 0 success or check passed, 1 violation
// found, 2 infeasible instance, 3 no minimal-cover partition, 4 input error,
// 5 partition search cap exceeded.

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bilift/io.hpp"
#include "bilift/lifting.hpp"

namespace {

using bilift::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitNoCover = 3;
constexpr int kExitInputError = 4;
constexpr int kExitCapExceeded = 5;

struct CommonOpts {
  std::string instance_path;
  std::string out_path;
  std::uint64_t seed = 42;
  std::int64_t samples = 10000;
  double tol = 1e-9;
  int grid = 401;
};

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw bilift::ParseError("cannot open output file " + out_path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

json config_json(const CommonOpts& opts) {
  return json{{"seed", opts.seed},
              {"samples", opts.samples},
              {"tol", opts.tol},
              {"grid", opts.grid},
              {"partition_search_cap", 20},
              {"extreme_point_cap_n", 14}};
}

json cut_entry(const bilift::SeparableInstance& inst,
               const bilift::Partition& part) {
  const bilift::CoverContext cover = bilift::cover_context(inst, part);
  json entry;
  if (part.J0.empty() && part.J1.empty()) {
    entry = bilift::cut_to_json(bilift::build_seed(cover));
  } else {
    entry = bilift::cut_to_json(bilift::build_lifted_cut(inst, part), cover);
  }
  entry["partition"] = bilift::instance_to_json(inst, &part)["partition"];
  return entry;
}

int run_gen_cut(const CommonOpts& opts, bool require_partition) {
  const bilift::ParsedInstance parsed =
      bilift::instance_from_json(bilift::load_json_file(opts.instance_path));
  json out{{"config", config_json(opts)}};
  json cuts = json::array();
  if (parsed.partition) {
    cuts.push_back(cut_entry(parsed.instance, *parsed.partition));
  } else if (require_partition) {
    std::cerr << "lift: the instance file must carry a partition\n";
    return kExitInputError;
  } else {
    const bilift::CoverSearchResult search =
        bilift::find_cover_partitions(parsed.instance);
    switch (search.status) {
      case bilift::CoverSearchStatus::kInfeasible:
        std::cerr << "gen-cut: infeasible, the positive coefficients cannot reach d\n";
        return kExitInfeasible;
      case bilift::CoverSearchStatus::kCertificate:
        std::cerr << "gen-cut: no minimal-cover yielding partition exists; "
                     "the set is packing-like and its convex hull is "
                     "polyhedral (McCormick bounds close it)\n";
        return kExitNoCover;
      case bilift::CoverSearchStatus::kCapExceeded:
        std::cerr << "gen-cut: partition search cap exceeded; no certificate\n";
        return kExitCapExceeded;
      case bilift::CoverSearchStatus::kFound:
        for (const bilift::Partition& part : search.partitions)
          cuts.push_back(cut_entry(parsed.instance, part));
        break;
    }
  }
  out["cuts"] = std::move(cuts);
  emit(opts.out_path, out.dump(2));
  return kExitOk;
}

int run_verify(const CommonOpts& opts, const std::string& cut_path) {
  const bilift::ParsedInstance parsed =
      bilift::instance_from_json(bilift::load_json_file(opts.instance_path));
  const bilift::LoadedCut loaded =
      bilift::cut_evaluator_from_json(bilift::load_json_file(cut_path));
  bilift::ValidityOptions vopts;
  vopts.samples = opts.samples;
  vopts.rng_seed = opts.seed;
  vopts.tolerance = opts.tol;
  const bilift::ValidityReport report =
      bilift::check_validity(loaded.evaluator, parsed.instance, vopts);
  json out{{"config", config_json(opts)},
           {"cut_kind", loaded.kind},
           {"report", bilift::validity_report_to_json(report)}};
  emit(opts.out_path, out.dump(2));
  return report.violated ? kExitViolation : kExitOk;
}

int run_strength(const CommonOpts& opts, const std::string& objective_path) {
  const bilift::ParsedInstance parsed =
      bilift::instance_from_json(bilift::load_json_file(opts.instance_path));
  const bilift::LinearObjective obj = bilift::objective_from_json(
      bilift::load_json_file(objective_path), parsed.instance.n());
  const bilift::StrengthReport report =
      bilift::approx_ratio(parsed.instance, obj);
  json out{{"config", config_json(opts)},
           {"report", bilift::strength_report_to_json(report)}};
  emit(opts.out_path, out.dump(2));
  return kExitOk;
}

int run_plot(const CommonOpts& opts, double lo, double hi, bool have_range) {
  const bilift::ParsedInstance parsed =
      bilift::instance_from_json(bilift::load_json_file(opts.instance_path));
  const bilift::Partition part =
      parsed.partition ? *parsed.partition
                       : bilift::Partition::trivial(parsed.instance);
  const bilift::CoverContext cover =
      bilift::cover_context(parsed.instance, part);
  if (!have_range) {
    const double total =
        std::accumulate(cover.a_I.begin(), cover.a_I.end(), 0.0);
    lo = -cover.delta - 1.0;
    hi = total - cover.d_lambda + 1.0;
  }
  const std::vector<bilift::LiftingSample> rows =
      bilift::sample_lifting(cover, lo, hi, opts.grid);
  std::ostringstream csv;
  std::vector<std::string> header;
  header.push_back("bilift plot-lifting");
  {
    std::ostringstream h;
    h << "grid=" << opts.grid << " lo=" << lo << " hi=" << hi
      << " delta=" << cover.delta << " l_plus=" << cover.l_plus
      << " l_minus=" << cover.l_minus;
    header.push_back(h.str());
  }
  bilift::write_lifting_csv(csv, rows, header);
  emit(opts.out_path, csv.str());
  return kExitOk;
}

int run_seqlift(const CommonOpts& opts, int grid) {
  const bilift::ParsedSeqLift parsed =
      bilift::seqlift_from_json(bilift::load_json_file(opts.instance_path));
  const double fix = parsed.seed.fixed_x[parsed.k];
  json out{{"config", config_json(opts)}};
  if (fix > 0.0 && fix < 1.0) {
    bilift::CertificateOptions copts;
    copts.rng_seed = opts.seed;
    copts.samples = opts.samples;
    const auto cert =
        bilift::nonliftable_certificate(parsed.instance, parsed.seed, parsed.k, copts);
    out["mode"] = "certificate";
    out["result"] =
        cert ? bilift::certificate_to_json(*cert) : json{{"certificate", false}};
    emit(opts.out_path, out.dump(2));
    return kExitOk;
  }
  bilift::LiftOptions lopts;
  lopts.grid = grid;
  lopts.rng_seed = opts.seed;
  lopts.validation_samples = opts.samples;
  const bilift::LiftResult result =
      bilift::lift_coefficient(parsed.instance, parsed.seed, parsed.k, lopts);
  out["mode"] = "lift";
  out["result"] = bilift::lift_result_to_json(result);
  emit(opts.out_path, out.dump(2));
  return result.validated ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex cut generation, lifting and verification for "
               "separable bipartite bilinear sets"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string cut_path, objective_path;
  double lo = 0.0, hi = 0.0;
  int seq_grid = 64;

  auto add_common = [&](CLI::App* cmd, bool needs_out_default = false) {
    (void)needs_out_default;
    cmd->add_option("--instance", opts.instance_path, "input JSON file")
        ->required();
    cmd->add_option("--out", opts.out_path, "output file (default stdout)");
    cmd->add_option("--seed", opts.seed, "rng seed");
    cmd->add_option("--samples", opts.samples, "sample count");
    cmd->add_option("--tol", opts.tol, "violation tolerance");
  };

  CLI::App* gen = app.add_subcommand("gen-cut",
      "search partitions and emit one cut per minimal-cover partition");
  add_common(gen);

  CLI::App* lift = app.add_subcommand("lift",
      "emit the lifted cut for the partition given in the instance file");
  add_common(lift);

  CLI::App* verify = app.add_subcommand("verify", "check a cut file against an instance");
  add_common(verify);
  verify->add_option("--cut", cut_path, "cut JSON file")->required();

  CLI::App* strength = app.add_subcommand("strength",
      "approximation ratio of the cut relaxation for a linear objective");
  add_common(strength);
  strength->add_option("--objective", objective_path, "objective JSON file")
      ->required();

  CLI::App* plot = app.add_subcommand("plot-lifting",
      "CSV of the lifting function and its two-slope bound");
  add_common(plot);
  CLI::Option* lo_opt = plot->add_option("--lo", lo, "grid lower end");
  plot->add_option("--hi", hi, "grid upper end");
  plot->add_option("--grid", opts.grid, "grid point count");

  CLI::App* seq = app.add_subcommand("seqlift",
      "sequential lifting coefficient or non-liftability certificate");
  add_common(seq);
  seq->add_option("--grid", seq_grid, "log-grid resolution for the lifted variable");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen_cut(opts, false);
    if (lift->parsed()) return run_gen_cut(opts, true);
    if (verify->parsed()) return run_verify(opts, cut_path);
    if (strength->parsed()) return run_strength(opts, objective_path);
    if (plot->parsed()) return run_plot(opts, lo, hi, lo_opt->count() > 0);
    if (seq->parsed()) return run_seqlift(opts, seq_grid);
  } catch (const bilift::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const bilift::NotMinimalCoverError& e) {
    std::cerr << "no minimal cover: " << e.what() << "\n";
    return kExitNoCover;
  } catch (const bilift::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
