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
// End-to-end runs of the command line binary.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "bilift/io.hpp"

namespace fs = std::filesystem;
using bilift::json;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("bilift_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

int run(const std::string& args) {
  const std::string cmd =
      std::string(BILIFT_CLI_PATH) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("gen-cut, verify and strength round trip") {
  TempDir tmp;
  const fs::path inst = tmp.path / "cover.json";
  write_file(inst, R"({"a": [2.0, 2.0], "d": 3.0})");
  const fs::path cuts_path = tmp.path / "cuts.json";
  REQUIRE(run("gen-cut --instance " + inst.string() + " --out " +
              cuts_path.string()) == 0);
  const json cuts = json::parse(read_file(cuts_path));
  REQUIRE(cuts.contains("cuts"));
  REQUIRE(cuts.at("cuts").size() >= 1);
  const json cut = cuts.at("cuts").at(0);
  CHECK(cut.at("type") == "bilinear_cover");
  CHECK(cut.at("coeffs").at(0).get<double>() ==
        doctest::Approx(2.0 + std::sqrt(2.0)));
  CHECK(cuts.contains("config"));

  // reruns are byte-identical
  const fs::path again = tmp.path / "cuts2.json";
  REQUIRE(run("gen-cut --instance " + inst.string() + " --out " +
              again.string()) == 0);
  CHECK(read_file(cuts_path) == read_file(again));

  const fs::path cut_path = tmp.path / "cut.json";
  write_file(cut_path, cut.dump());
  const fs::path report_path = tmp.path / "report.json";
  CHECK(run("verify --instance " + inst.string() + " --cut " +
            cut_path.string() + " --samples 2000 --out " +
            report_path.string()) == 0);
  const json report = json::parse(read_file(report_path));
  CHECK(report.at("report").at("violated") == false);

  // strengthening a coefficient past validity flips the exit code
  json broken = cut;
  broken["coeffs"][0] = broken["coeffs"][0].get<double>() * 2.0;
  const fs::path broken_path = tmp.path / "broken.json";
  write_file(broken_path, broken.dump());
  CHECK(run("verify --instance " + inst.string() + " --cut " +
            broken_path.string() + " --samples 2000 --out " +
            (tmp.path / "broken_report.json").string()) == 1);

  const fs::path obj_path = tmp.path / "obj.json";
  write_file(obj_path, R"({"p": [1.0, 1.0], "q": [1.0, 1.0]})");
  const fs::path strength_path = tmp.path / "strength.json";
  CHECK(run("strength --instance " + inst.string() + " --objective " +
            obj_path.string() + " --out " + strength_path.string()) == 0);
  const json strength = json::parse(read_file(strength_path));
  CHECK(strength.at("report").at("ratio").get<double>() ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("lift requires a partition and uses it") {
  TempDir tmp;
  const fs::path inst = tmp.path / "lifted.json";
  write_file(inst, R"({"a": [2.0, 2.0, 1.5], "d": 3.0,
                       "partition": {"I": [1, 2], "J0": [3], "J1": []}})");
  const fs::path out = tmp.path / "cut.json";
  REQUIRE(run("lift --instance " + inst.string() + " --out " + out.string()) ==
          0);
  const json cuts = json::parse(read_file(out));
  const json cut = cuts.at("cuts").at(0);
  REQUIRE(cut.contains("gammas"));
  CHECK(cut.at("gammas").at(0).at("class") == "J0plus");

  const fs::path bare = tmp.path / "bare.json";
  write_file(bare, R"({"a": [2.0, 2.0, 1.5], "d": 3.0})");
  CHECK(run("lift --instance " + bare.string()) == 4);
}

TEST_CASE("exit codes for degenerate instances") {
  TempDir tmp;
  const fs::path packing = tmp.path / "packing.json";
  write_file(packing, R"({"a": [1.0, -100.0], "d": -98.0})");
  CHECK(run("gen-cut --instance " + packing.string()) == 3);

  const fs::path infeasible = tmp.path / "infeasible.json";
  write_file(infeasible, R"({"a": [1.0, 1.0], "d": 5.0})");
  CHECK(run("gen-cut --instance " + infeasible.string()) == 2);

  const fs::path bad = tmp.path / "bad.json";
  write_file(bad, "{ not json");
  CHECK(run("gen-cut --instance " + bad.string()) == 4);
  CHECK(run("gen-cut --instance " + (tmp.path / "missing.json").string()) == 4);
}

TEST_CASE("plot-lifting emits the sandwich csv") {
  TempDir tmp;
  const fs::path inst = tmp.path / "flat.json";
  write_file(inst, R"({"a": [1.0, 1.0], "d": 1.0})");
  const fs::path csv_path = tmp.path / "lift.csv";
  REQUIRE(run("plot-lifting --instance " + inst.string() +
              " --lo -2 --hi 2 --grid 401 --out " + csv_path.string()) == 0);
  std::ifstream in(csv_path);
  std::string line;
  bool header_seen = false;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) continue;
    if (!header_seen) {
      CHECK(line == "delta,phi,psi");
      header_seen = true;
      continue;
    }
    ++rows;
    std::stringstream ss(line);
    std::string d, phi, psi;
    std::getline(ss, d, ',');
    std::getline(ss, phi, ',');
    std::getline(ss, psi, ',');
    if (phi == "-inf") {
      CHECK(std::stod(d) < -1.0 + 1e-12);
      continue;
    }
    CHECK(std::stod(psi) >= std::stod(phi) - 1e-9);
  }
  CHECK(rows == 401);
}

TEST_CASE("seqlift lifting and certificate modes") {
  TempDir tmp;
  const fs::path chain = tmp.path / "chain.json";
  write_file(chain, R"({
    "Q": [[1.0], [2.0]], "a": [0.0, 0.0], "b": [0.0], "c": 1.0,
    "fix": {"x": [null, 0], "y": [null]}, "k": 2,
    "seed": {"type": "sqrt_xy", "i": 1, "j": 1, "rhs": 1.0}
  })");
  const fs::path lift_out = tmp.path / "lift.json";
  REQUIRE(run("seqlift --instance " + chain.string() + " --out " +
              lift_out.string()) == 0);
  const json lifted = json::parse(read_file(lift_out));
  CHECK(lifted.at("mode") == "lift");
  CHECK(lifted.at("result").at("estimate").get<double>() ==
        doctest::Approx(2.0).epsilon(1e-3));
  CHECK(lifted.at("result").at("validated") == true);

  const fs::path interior = tmp.path / "interior.json";
  write_file(interior, R"({
    "Q": [[1.0], [0.0]], "a": [-0.5, -0.25], "b": [-0.25], "c": 0.0,
    "fix": {"x": [null, 0.5], "y": [null]}, "k": 2,
    "seed": {"type": "linear", "px": [1.0, 0.0], "qy": [0.0], "rhs": 0.75}
  })");
  const fs::path cert_out = tmp.path / "cert.json";
  REQUIRE(run("seqlift --instance " + interior.string() + " --out " +
              cert_out.string()) == 0);
  const json cert = json::parse(read_file(cert_out));
  CHECK(cert.at("mode") == "certificate");
  CHECK(cert.at("result").at("certificate") == true);
  CHECK(cert.at("result").at("upper_bound").get<double>() == -1.5);
  CHECK(cert.at("result").at("lower_bound").get<double>() == -0.5);
}

TEST_SUITE_END();
