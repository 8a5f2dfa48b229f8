// tests/test_cli.cc
//
// Copyright 2026  The tdcf authors
//
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cost_model.h"
#include "score_data.h"
#include "tdcf_core.h"

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

fs::path TestDir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("tdcf_cli_test_" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << text;
}

RunResult RunCli(const std::string& args) {
  static int run_id = 0;
  const fs::path out_path = TestDir() / ("stdout_" + std::to_string(run_id) + ".txt");
  const fs::path err_path = TestDir() / ("stderr_" + std::to_string(run_id) + ".txt");
  ++run_id;
  const std::string cmd = std::string(TDCF_CLI_PATH) + " " + args + " > " +
                          out_path.string() + " 2> " + err_path.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = ReadFile(out_path);
  r.err = ReadFile(err_path);
  return r;
}

fs::path SmallAsvFile() {
  const fs::path path = TestDir() / "small_asv.txt";
  WriteFile(path,
            "t1 target 2.0\n"
            "t2 target 0.6\n"
            "t3 target 1.4\n"
            "n1 nontarget -1.0\n"
            "n2 nontarget 0.2\n"
            "n3 nontarget -0.4\n"
            "s1 spoof 1.0 A01\n"
            "s2 spoof 0.4 A02\n"
            "s3 spoof -0.1 A01\n");
  return path;
}

fs::path SmallCmFile() {
  const fs::path path = TestDir() / "small_cm.txt";
  WriteFile(path,
            "t1 target 1.1\n"
            "t2 target 2.0\n"
            "t3 bonafide 0.7\n"
            "n1 nontarget 1.6\n"
            "s1 spoof -0.5 A01\n"
            "s2 spoof 0.1 A02\n"
            "s3 spoof -1.2 A01\n");
  return path;
}

std::vector<std::string> SplitLines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string DropTimestampLines(const std::string& text) {
  std::string out;
  for (const auto& line : SplitLines(text)) {
    if (line.find("\"timestamp\"") != std::string::npos) continue;
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

TEST_CASE("cli: usage and version") {
  CHECK(RunCli("").exit_code == 1);
  const auto version = RunCli("--version");
  CHECK(version.exit_code == 0);
  CHECK(version.out.find("tdcf") != std::string::npos);
  const auto help = RunCli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("evaluate") != std::string::npos);
}

TEST_CASE("cli: validation failures exit 1 with diagnostics") {
  const auto missing = RunCli("evaluate /does/not/exist.txt /also/missing.txt");
  CHECK(missing.exit_code == 1);
  CHECK(missing.err.find("error:") != std::string::npos);

  const fs::path bad = TestDir() / "bad.txt";
  WriteFile(bad, "t1 target 1.0\nt2 target NaN\n");
  const auto malformed = RunCli("evaluate " + bad.string() + " " + bad.string());
  CHECK(malformed.exit_code == 1);
  CHECK(malformed.err.find("line 2") != std::string::npos);

  const auto bad_policy = RunCli("evaluate " + SmallAsvFile().string() + " " +
                                 SmallCmFile().string() + " --policy bogus");
  CHECK(bad_policy.exit_code == 1);
}

TEST_CASE("cli: degenerate cost model exits 2") {
  const fs::path model = TestDir() / "degenerate_model.txt";
  // Reject-all dummy costs beta = 0.5, accept-all dummy costs 0.
  WriteFile(model,
            "pi_tar 0.5\npi_spoof 0.0\nc_miss 1.0\nc_fa 0.0\nc_fa_spoof 0.0\n");
  const auto r = RunCli("evaluate " + SmallAsvFile().string() + " " +
                        SmallCmFile().string() + " --cost-model " + model.string());
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli: cost model file in key-value and JSON forms") {
  const fs::path kv = TestDir() / "model_kv.txt";
  WriteFile(kv,
            "# banking-style parameters\n"
            "pi_tar = 0.9405\n"
            "pi_spoof: 0.05\n"
            "c_miss 1\nc_fa 10\nc_fa_spoof 10\n");
  const auto r1 = RunCli("evaluate " + SmallAsvFile().string() + " " +
                         SmallCmFile().string() + " --cost-model " + kv.string());
  CHECK(r1.exit_code == 0);

  const fs::path js = TestDir() / "model.json";
  WriteFile(js,
            "{\"pi_tar\": 0.9405, \"pi_spoof\": 0.05, \"c_miss\": 1, "
            "\"c_fa\": 10, \"c_fa_spoof\": 10}");
  const auto r2 = RunCli("evaluate " + SmallAsvFile().string() + " " +
                         SmallCmFile().string() + " --cost-model " + js.string());
  CHECK(r2.exit_code == 0);

  CHECK(json::parse(r1.out)["tdcf"]["min_normalized"] ==
        json::parse(r2.out)["tdcf"]["min_normalized"]);

  const fs::path incomplete = TestDir() / "model_incomplete.txt";
  WriteFile(incomplete, "pi_tar 0.9\n");
  CHECK(RunCli("evaluate " + SmallAsvFile().string() + " " + SmallCmFile().string() +
               " --cost-model " + incomplete.string())
            .exit_code == 1);
}

TEST_CASE("cli: evaluate emits the documented report schema") {
  const auto r = RunCli("evaluate " + SmallAsvFile().string() + " " +
                        SmallCmFile().string() + " --pi-spoof 0.05 --policy eer");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);

  for (const char* key :
       {"manifest", "cost_model", "asv_operating_point", "coefficients", "tdcf", "flags"}) {
    CHECK(doc.contains(key));
  }
  CHECK(doc["manifest"]["subcommand"] == "evaluate");
  CHECK(doc["manifest"]["tool_version"].is_string());
  REQUIRE(doc["manifest"]["inputs"].size() == 2);
  CHECK(doc["manifest"]["inputs"][0]["sha256"].get<std::string>().size() == 64);
  CHECK(doc["cost_model"]["pi_spoof"] == 0.05);
  CHECK(doc["asv_operating_point"]["policy"] == "eer");
  CHECK(doc["tdcf"]["variant"] == "constrained");
  CHECK(doc["tdcf"]["min_normalized"].get<double>() <= 1.0);
  CHECK(doc["tdcf"]["normalized"] == doc["tdcf"]["min_normalized"]);
  CHECK(doc["tdcf"]["references"]["default_cm_normalized"] == 1.0);
  // Every numeric field finite; threshold sentinels are strings.
  const auto& argmin = doc["tdcf"]["argmin"]["tau_cm"];
  CHECK((argmin.is_number() || argmin == "inf" || argmin == "-inf"));
}

TEST_CASE("cli: reject-everything ASV policy pins the normalized min to one") {
  const auto r = RunCli("evaluate " + SmallAsvFile().string() + " " +
                        SmallCmFile().string() + " --policy fixed:inf");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["tdcf"]["min_normalized"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  const auto flags = doc["flags"].get<std::vector<std::string>>();
  CHECK(std::find(flags.begin(), flags.end(), "cm-irrelevant") != flags.end());
}

TEST_CASE("cli: sweep CSV is rectangular with threshold headers") {
  const auto r = RunCli("sweep " + SmallAsvFile().string() + " " +
                        SmallCmFile().string() + " --pi-spoof 0.05");
  REQUIRE(r.exit_code == 0);
  const auto lines = SplitLines(r.out);
  REQUIRE(lines.size() >= 4);
  CHECK(lines[0].rfind("tau_asv,", 0) == 0);
  const auto columns = std::count(lines[0].begin(), lines[0].end(), ',');
  double min_cell = 1e300;
  for (size_t i = 1; i < lines.size(); ++i) {
    CHECK(std::count(lines[i].begin(), lines[i].end(), ',') == columns);
    std::istringstream row(lines[i]);
    std::string cell;
    std::getline(row, cell, ',');  // tau_asv label
    while (std::getline(row, cell, ',')) {
      min_cell = std::min(min_cell, std::stod(cell));
    }
  }
  CHECK(min_cell <= 1.0);  // the grid contains the dummy systems
  // Column header carries -inf / inf sentinels at the ends.
  CHECK(lines[0].find("-inf") != std::string::npos);
  CHECK(lines[0].rfind("inf") != std::string::npos);

  // The surface minimum is the joint minimum: same search space. Cells are
  // written with shortest round-trip formatting, so this holds bit-exactly.
  const tdcf::AsvScoreSet asv = tdcf::ParseAsvScores(ReadFile(SmallAsvFile()));
  const tdcf::CmScoreSet cm = tdcf::ParseCmScores(ReadFile(SmallCmFile()));
  const tdcf::TdcfReport joint =
      tdcf::MinTdcfUnconstrained(tdcf::Asvspoof19Model(0.05), asv, cm);
  CHECK(min_cell == joint.min_normalized);
}

TEST_CASE("cli: evaluate under the min-c0 policy") {
  const auto r = RunCli("evaluate " + SmallAsvFile().string() + " " +
                        SmallCmFile().string() + " --policy min-c0");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["asv_operating_point"]["policy"] == "min-c0");
  CHECK_FALSE(doc["asv_operating_point"].contains("eer"));
  // The floor at the min-c0 point cannot exceed the floor at the EER point.
  const auto eer_run = RunCli("evaluate " + SmallAsvFile().string() + " " +
                              SmallCmFile().string() + " --policy eer");
  REQUIRE(eer_run.exit_code == 0);
  CHECK(doc["coefficients"]["c0"].get<double>() <=
        json::parse(eer_run.out)["coefficients"]["c0"].get<double>());
}

TEST_CASE("cli: coefficients CSV, pooled and per attack") {
  const auto pooled = RunCli("coefficients " + SmallAsvFile().string());
  REQUIRE(pooled.exit_code == 0);
  const auto lines = SplitLines(pooled.out);
  CHECK(lines[0] == "tau_asv,c0,c1,c2");
  CHECK(lines.size() >= 4);

  const auto per_attack =
      RunCli("coefficients " + SmallAsvFile().string() + " --per-attack");
  REQUIRE(per_attack.exit_code == 0);
  const auto pa_lines = SplitLines(per_attack.out);
  CHECK(pa_lines[0] == "attack,tau_asv,c0,c1,c2");
  CHECK(pa_lines[1].rfind("A01,", 0) == 0);
  bool has_a02 = false;
  for (const auto& line : pa_lines) has_a02 |= line.rfind("A02,", 0) == 0;
  CHECK(has_a02);

  const fs::path no_attacks = TestDir() / "no_attack_ids.txt";
  WriteFile(no_attacks, "t1 target 1.0\nn1 nontarget 0.0\ns1 spoof 0.5\n");
  CHECK(RunCli("coefficients " + no_attacks.string() + " --per-attack").exit_code == 1);
}

TEST_CASE("cli: simulate writes score files plus manifest; evaluate reads them") {
  const fs::path dir = TestDir() / "sim_small";
  const auto r = RunCli("simulate --eer-asv 0.05 --eer-cm 0.08 --xi 0.7 "
                        "--n-tar 400 --n-non 400 --n-spoof 300 --seed 11 --out " +
                        dir.string());
  REQUIRE(r.exit_code == 0);
  REQUIRE(fs::exists(dir / "asv_scores.txt"));
  REQUIRE(fs::exists(dir / "cm_scores.txt"));
  REQUIRE(fs::exists(dir / "manifest.json"));
  const json manifest = json::parse(ReadFile(dir / "manifest.json"));
  CHECK(manifest["manifest"]["seed"] == 11);
  CHECK(manifest["manifest"]["outputs"].size() == 2);

  const auto eval = RunCli("evaluate " + (dir / "asv_scores.txt").string() + " " +
                           (dir / "cm_scores.txt").string() + " --pi-spoof 0.05");
  CHECK(eval.exit_code == 0);
  CHECK(json::parse(eval.out)["tdcf"]["min_normalized"].get<double>() <= 1.0);

  // simulate without --out has nowhere to put score files.
  CHECK(RunCli("simulate --n-tar 10 --n-non 10 --n-spoof 10").exit_code == 1);
}

TEST_CASE("cli: select-thresholds with dev == eval reproduces the minimum") {
  const std::string files = SmallAsvFile().string() + " " + SmallCmFile().string();
  const auto r = RunCli("select-thresholds " + files + " " + files + " --pi-spoof 0.05");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["comparison"].size() == 4);
  // Columns 3 and 4 share the ASV threshold; with dev == eval the dev-tuned
  // CM threshold is the eval minimizer, so the costs coincide.
  CHECK(doc["comparison"][2]["tdcf_normalized"] == doc["comparison"][3]["tdcf_normalized"]);
  CHECK(doc["actual_tdcf"]["normalized"] == doc["actual_tdcf"]["min_normalized"]);
  CHECK(doc["selection"].contains("tau_asv"));
  CHECK(doc["selection"].contains("tau_cm"));
}

TEST_CASE("cli: reports are byte-identical given pinned timestamps") {
  const std::string base = "evaluate " + SmallAsvFile().string() + " " +
                           SmallCmFile().string() +
                           " --pi-spoof 0.05 --timestamp 2020-01-01T00:00:00Z";
  const auto a = RunCli(base);
  const auto b = RunCli(base);
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(a.out == b.out);

  // Unpinned runs may differ only in the timestamp line.
  const std::string unpinned = "evaluate " + SmallAsvFile().string() + " " +
                               SmallCmFile().string() + " --pi-spoof 0.05";
  const auto c = RunCli(unpinned);
  const auto d = RunCli(unpinned);
  CHECK(DropTimestampLines(c.out) == DropTimestampLines(d.out));
  CHECK(DropTimestampLines(a.out) == DropTimestampLines(c.out));
}
