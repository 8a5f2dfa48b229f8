// tools/tdcf_cli.cc
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

// Command-line front end. Talks to the library exclusively through the
// extern-C API in tdcf/tdcf.h; report assembly, CSV/JSON serialization and
// manifest bookkeeping live here.
//
// Exit codes: 0 success, 1 validation/usage error, 2 degenerate cost model.

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tdcf/tdcf.h"

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void Fail(int exit_code, const std::string& message) {
  throw CliError{exit_code, message};
}

void Check(tdcf_status status) {
  if (status == TDCF_OK) return;
  Fail(status == TDCF_ERR_DEGENERATE_MODEL ? 2 : 1, tdcf_last_error());
}

using ScoreSetPtr = std::unique_ptr<tdcf_score_set, decltype(&tdcf_score_set_free)>;
using ModelPtr = std::unique_ptr<tdcf_cost_model, decltype(&tdcf_cost_model_free)>;

ScoreSetPtr ParseScoreFile(const std::string& path, tdcf_score_kind kind) {
  tdcf_score_set* set = nullptr;
  const tdcf_status status = tdcf_score_set_parse_file(path.c_str(), kind, &set);
  if (status != TDCF_OK) {
    Fail(1, path + ": " + tdcf_last_error());
  }
  for (int64_t i = 0; i < tdcf_score_set_warning_count(set); ++i) {
    std::cerr << "warning: " << path << ": " << tdcf_score_set_warning(set, i)
              << "\n";
  }
  return ScoreSetPtr(set, &tdcf_score_set_free);
}

std::string ReadFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(1, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

std::string Sha256Hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static const char* kHex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xf];
  }
  return out;
}

std::string NowUtcIso() {
  const std::time_t t = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string FormatCsvDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, end);
}

// Thresholds may be infinite; JSON numeric fields must stay finite, so the
// sentinels are spelled out as strings.
json JsonThreshold(double value) {
  if (std::isinf(value)) return value > 0 ? json("inf") : json("-inf");
  return json(value);
}

double ParseThresholdString(const std::string& text) {
  if (text == "inf" || text == "+inf") return kInf;
  if (text == "-inf") return -kInf;
  try {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || std::isnan(v)) Fail(1, "bad threshold '" + text + "'");
    return v;
  } catch (const std::exception&) {
    Fail(1, "bad threshold '" + text + "'");
  }
}

std::vector<std::string> FlagStrings(uint32_t flags) {
  std::vector<std::string> out;
  if (flags & TDCF_FLAG_BADLY_CALIBRATED) out.push_back("badly-calibrated");
  if (flags & TDCF_FLAG_NO_SPOOF_TRIALS) out.push_back("no-spoof-trials");
  if (flags & TDCF_FLAG_NEGATIVE_C1) out.push_back("negative-c1");
  if (flags & TDCF_FLAG_CM_IRRELEVANT) out.push_back("cm-irrelevant");
  if (flags & TDCF_FLAG_ZERO_SPOOF_PRIOR_WITH_SPOOFS) {
    out.push_back("zero-spoof-prior-with-spoof-trials");
  }
  return out;
}

// ---- cost model resolution ------------------------------------------------

struct CostModelOptions {
  std::string file;
  std::string preset;
  double pi_spoof = 0.05;

  void Register(CLI::App* cmd) {
    cmd->add_option("--cost-model", file,
                    "cost model file (key-value or JSON: pi_tar, pi_spoof, "
                    "c_miss, c_fa, c_fa_spoof)");
    cmd->add_option("--preset", preset, "named cost model preset")
        ->check(CLI::IsMember({"asvspoof19"}));
    cmd->add_option("--pi-spoof", pi_spoof,
                    "spoof prior for the asvspoof19 preset (default 0.05)");
  }
};

double RequireKey(const std::map<std::string, double>& kv, const std::string& key,
                  const std::string& path) {
  const auto it = kv.find(key);
  if (it == kv.end()) Fail(1, path + ": missing cost model key '" + key + "'");
  return it->second;
}

ModelPtr LoadCostModelFile(const std::string& path, json* source_out) {
  const std::string text = ReadFileBytes(path);
  std::map<std::string, double> kv;

  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      Fail(1, path + ": " + e.what());
    }
    for (const auto& [key, value] : doc.items()) {
      if (!value.is_number()) Fail(1, path + ": key '" + key + "' is not numeric");
      kv[key] = value.get<double>();
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
      ++line_no;
      for (char& c : line) {
        if (c == '=' || c == ':') c = ' ';
      }
      std::istringstream fields(line);
      std::string key;
      if (!(fields >> key) || key[0] == '#') continue;
      double value = 0.0;
      if (!(fields >> value)) {
        Fail(1, path + ": line " + std::to_string(line_no) + ": expected `key value`");
      }
      kv[key] = value;
    }
  }

  tdcf_cost_model* model = nullptr;
  Check(tdcf_cost_model_create(RequireKey(kv, "pi_tar", path),
                               RequireKey(kv, "pi_spoof", path),
                               RequireKey(kv, "c_miss", path),
                               RequireKey(kv, "c_fa", path),
                               RequireKey(kv, "c_fa_spoof", path), &model));
  *source_out = json{{"type", "file"}, {"path", path}};
  return ModelPtr(model, &tdcf_cost_model_free);
}

ModelPtr ResolveCostModel(const CostModelOptions& opts, json* source_out) {
  if (!opts.file.empty() && !opts.preset.empty()) {
    Fail(1, "--cost-model and --preset are mutually exclusive");
  }
  if (!opts.file.empty()) return LoadCostModelFile(opts.file, source_out);
  // Default: the asvspoof19 preset.
  tdcf_cost_model* model = nullptr;
  Check(tdcf_cost_model_asvspoof19(opts.pi_spoof, &model));
  *source_out = json{{"type", "preset"},
                     {"name", "asvspoof19"},
                     {"pi_spoof", opts.pi_spoof}};
  return ModelPtr(model, &tdcf_cost_model_free);
}

json CostModelJson(const tdcf_cost_model* model) {
  double pi_tar = 0, pi_non = 0, pi_spoof = 0, c_miss = 0, c_fa = 0, c_fs = 0;
  tdcf_cost_model_params(model, &pi_tar, &pi_non, &pi_spoof, &c_miss, &c_fa, &c_fs);
  return json{{"pi_tar", pi_tar},     {"pi_non", pi_non},
              {"pi_spoof", pi_spoof}, {"c_miss", c_miss},
              {"c_fa", c_fa},         {"c_fa_spoof", c_fs}};
}

// ---- manifest --------------------------------------------------------------

struct ManifestBuilder {
  std::string subcommand;
  std::string timestamp;
  json cost_model_source;  // null when the subcommand takes no model
  const tdcf_cost_model* model = nullptr;
  std::vector<std::string> input_paths;
  std::optional<uint64_t> seed;

  json Build() const {
    json m;
    m["subcommand"] = subcommand;
    m["tool_version"] = tdcf_version();
    m["timestamp"] = timestamp;
    if (model != nullptr) {
      json cm = CostModelJson(model);
      cm["source"] = cost_model_source;
      m["cost_model"] = cm;
    }
    json inputs = json::array();
    for (const auto& path : input_paths) {
      inputs.push_back(json{{"path", path}, {"sha256", Sha256Hex(ReadFileBytes(path))}});
    }
    m["inputs"] = inputs;
    if (seed.has_value()) m["seed"] = *seed;
    return m;
  }
};

// ---- output plumbing --------------------------------------------------------

struct OutputOptions {
  std::string out_dir;
  std::string timestamp;

  void Register(CLI::App* cmd) {
    cmd->add_option("--out", out_dir, "directory for output files (default: stdout)");
    cmd->add_option("--timestamp", timestamp,
                    "pin the manifest timestamp (for reproducible reports)");
  }

  std::string Timestamp() const {
    return timestamp.empty() ? NowUtcIso() : timestamp;
  }
};

void EmitText(const OutputOptions& out, const std::string& filename,
              const std::string& text) {
  if (out.out_dir.empty()) {
    std::cout << text;
    return;
  }
  fs::create_directories(out.out_dir);
  const fs::path path = fs::path(out.out_dir) / filename;
  std::ofstream f(path, std::ios::binary);
  if (!f) Fail(1, "cannot write '" + path.string() + "'");
  f << text;
}

void EmitJson(const OutputOptions& out, const std::string& filename,
              const json& doc) {
  EmitText(out, filename, doc.dump(2) + "\n");
}

json RatesJson(const tdcf_asv_rates& r) {
  json j;
  j["threshold"] = JsonThreshold(r.threshold);
  j["p_miss"] = r.p_miss;
  j["p_fa"] = r.p_fa;
  j["p_fa_spoof"] = r.p_fa_spoof;
  j["spoof_free"] = r.spoof_free != 0;
  return j;
}

json CoefficientsJson(const tdcf_coefficients& c) {
  return json{{"c0", c.c0}, {"c1", c.c1}, {"c2", c.c2}};
}

// Appended by subcommands that know set-level context the report lacks.
uint32_t ZeroSpoofPriorFlag(const tdcf_cost_model* model,
                            const tdcf_score_set* asv,
                            const tdcf_score_set* cm) {
  double pi_spoof = 1.0;
  tdcf_cost_model_params(model, nullptr, nullptr, &pi_spoof, nullptr, nullptr,
                         nullptr);
  if (pi_spoof != 0.0) return 0;
  int64_t n = 0;
  int64_t total = 0;
  if (asv != nullptr) {
    tdcf_score_set_counts(asv, nullptr, nullptr, nullptr, &n);
    total += n;
  }
  if (cm != nullptr) {
    tdcf_score_set_counts(cm, nullptr, nullptr, nullptr, &n);
    total += n;
  }
  return total > 0 ? TDCF_FLAG_ZERO_SPOOF_PRIOR_WITH_SPOOFS : 0;
}

// ---- evaluate ---------------------------------------------------------------

struct EvaluateArgs {
  std::string asv_file, cm_file;
  std::string policy = "eer";
  CostModelOptions cost;
  OutputOptions output;
};

double ResolveAsvThreshold(const std::string& policy, const tdcf_cost_model* model,
                           const tdcf_score_set* asv, double* eer_out) {
  if (policy == "eer") {
    double eer = 0.0, tau = 0.0;
    Check(tdcf_score_set_eer(asv, &eer, &tau));
    if (eer_out) *eer_out = eer;
    return tau;
  }
  if (policy == "min-c0") {
    double tau = 0.0;
    Check(tdcf_select_asv_threshold(model, asv, &tau));
    return tau;
  }
  if (policy.rfind("fixed:", 0) == 0) {
    return ParseThresholdString(policy.substr(6));
  }
  Fail(1, "unknown --policy '" + policy + "' (use eer, min-c0, or fixed:<value>)");
}

void RunEvaluate(const EvaluateArgs& args) {
  ScoreSetPtr asv = ParseScoreFile(args.asv_file, TDCF_SCORES_ASV);
  ScoreSetPtr cm = ParseScoreFile(args.cm_file, TDCF_SCORES_CM);
  json source;
  ModelPtr model = ResolveCostModel(args.cost, &source);

  double eer = std::numeric_limits<double>::quiet_NaN();
  const double tau_asv = ResolveAsvThreshold(args.policy, model.get(), asv.get(), &eer);

  tdcf_asv_rates rates{};
  Check(tdcf_asv_error_rates(asv.get(), tau_asv, &rates));
  tdcf_coefficients coeffs{};
  Check(tdcf_compute_coefficients(model.get(), &rates, &coeffs));
  tdcf_report report{};
  Check(tdcf_min_constrained(&coeffs, cm.get(), &report));
  report.flags |= ZeroSpoofPriorFlag(model.get(), asv.get(), cm.get());

  ManifestBuilder manifest;
  manifest.subcommand = "evaluate";
  manifest.timestamp = args.output.Timestamp();
  manifest.cost_model_source = source;
  manifest.model = model.get();
  manifest.input_paths = {args.asv_file, args.cm_file};

  json operating_point = RatesJson(rates);
  operating_point["policy"] = args.policy;
  if (args.policy == "eer") operating_point["eer"] = eer;

  json tdcf_obj;
  tdcf_obj["variant"] = "constrained";
  tdcf_obj["raw"] = report.raw;
  tdcf_obj["default"] = report.default_cost;
  tdcf_obj["normalized"] = report.normalized;
  tdcf_obj["min_normalized"] = report.min_normalized;
  tdcf_obj["argmin"] = json{{"tau_cm", JsonThreshold(report.argmin_tau_cm)}};
  tdcf_obj["references"] = json{
      {"asv_floor_normalized", coeffs.c0 / report.default_cost},
      {"default_cm_normalized", 1.0}};

  json doc;
  doc["manifest"] = manifest.Build();
  doc["cost_model"] = CostModelJson(model.get());
  doc["asv_operating_point"] = operating_point;
  doc["coefficients"] = CoefficientsJson(coeffs);
  doc["tdcf"] = tdcf_obj;
  doc["flags"] = FlagStrings(report.flags);

  EmitJson(args.output, "report.json", doc);
}

// ---- sweep ------------------------------------------------------------------

struct SweepArgs {
  std::string asv_file, cm_file;
  CostModelOptions cost;
  OutputOptions output;
};

void RunSweep(const SweepArgs& args) {
  ScoreSetPtr asv = ParseScoreFile(args.asv_file, TDCF_SCORES_ASV);
  ScoreSetPtr cm = ParseScoreFile(args.cm_file, TDCF_SCORES_CM);
  json source;
  ModelPtr model = ResolveCostModel(args.cost, &source);

  double default_cost = 0.0;
  Check(tdcf_default_unconstrained(model.get(), &default_cost));

  tdcf_asv_rates* asv_sweep = nullptr;
  tdcf_cm_rates* cm_sweep = nullptr;
  int64_t n_asv = 0, n_cm = 0;
  Check(tdcf_asv_sweep(asv.get(), &asv_sweep, &n_asv));
  Check(tdcf_cm_sweep(cm.get(), &cm_sweep, &n_cm));

  // Rows are ASV candidates, columns CM candidates, cells the normalized
  // unconstrained cost.
  std::ostringstream csv;
  csv << "tau_asv";
  for (int64_t j = 0; j < n_cm; ++j) {
    csv << ',' << FormatCsvDouble(cm_sweep[j].threshold);
  }
  csv << '\n';
  for (int64_t i = 0; i < n_asv; ++i) {
    csv << FormatCsvDouble(asv_sweep[i].threshold);
    for (int64_t j = 0; j < n_cm; ++j) {
      double raw = 0.0;
      Check(tdcf_unconstrained(model.get(), &asv_sweep[i], &cm_sweep[j], &raw));
      csv << ',' << FormatCsvDouble(raw / default_cost);
    }
    csv << '\n';
  }
  tdcf_free(asv_sweep);
  tdcf_free(cm_sweep);

  EmitText(args.output, "sweep.csv", csv.str());
  if (!args.output.out_dir.empty()) {
    ManifestBuilder manifest;
    manifest.subcommand = "sweep";
    manifest.timestamp = args.output.Timestamp();
    manifest.cost_model_source = source;
    manifest.model = model.get();
    manifest.input_paths = {args.asv_file, args.cm_file};
    EmitJson(args.output, "manifest.json", manifest.Build());
  }
}

// ---- coefficients -----------------------------------------------------------

struct CoefficientsArgs {
  std::string asv_file;
  bool per_attack = false;
  CostModelOptions cost;
  OutputOptions output;
};

void AppendCurveRows(std::ostringstream& csv, const tdcf_cost_model* model,
                     const tdcf_score_set* asv, const std::string& attack) {
  tdcf_coefficient_row* rows = nullptr;
  int64_t n = 0;
  Check(tdcf_coefficient_curves(model, asv, &rows, &n));
  for (int64_t i = 0; i < n; ++i) {
    if (!attack.empty()) csv << attack << ',';
    csv << FormatCsvDouble(rows[i].tau_asv) << ',' << FormatCsvDouble(rows[i].c0)
        << ',' << FormatCsvDouble(rows[i].c1) << ',' << FormatCsvDouble(rows[i].c2)
        << '\n';
  }
  tdcf_free(rows);
}

void RunCoefficients(const CoefficientsArgs& args) {
  ScoreSetPtr asv = ParseScoreFile(args.asv_file, TDCF_SCORES_ASV);
  json source;
  ModelPtr model = ResolveCostModel(args.cost, &source);

  std::ostringstream csv;
  if (args.per_attack) {
    char** ids = nullptr;
    int64_t n_ids = 0;
    Check(tdcf_score_set_attacks(asv.get(), &ids, &n_ids));
    if (n_ids == 0) {
      tdcf_free_strings(ids, n_ids);
      Fail(1, args.asv_file + ": no attack ids present for --per-attack");
    }
    csv << "attack,tau_asv,c0,c1,c2\n";
    for (int64_t i = 0; i < n_ids; ++i) {
      tdcf_score_set* sub = nullptr;
      Check(tdcf_score_set_per_attack(asv.get(), ids[i], &sub));
      ScoreSetPtr sub_ptr(sub, &tdcf_score_set_free);
      AppendCurveRows(csv, model.get(), sub, ids[i]);
    }
    tdcf_free_strings(ids, n_ids);
  } else {
    csv << "tau_asv,c0,c1,c2\n";
    AppendCurveRows(csv, model.get(), asv.get(), "");
  }

  EmitText(args.output, "coefficients.csv", csv.str());
  if (!args.output.out_dir.empty()) {
    ManifestBuilder manifest;
    manifest.subcommand = "coefficients";
    manifest.timestamp = args.output.Timestamp();
    manifest.cost_model_source = source;
    manifest.model = model.get();
    manifest.input_paths = {args.asv_file};
    EmitJson(args.output, "manifest.json", manifest.Build());
  }
}

// ---- simulate ---------------------------------------------------------------

struct SimulateArgs {
  tdcf_sim_config config{0.01, 0.02, 0.85, 100000, 100000, 100000, 1};
  OutputOptions output;
};

void RunSimulate(const SimulateArgs& args) {
  if (args.output.out_dir.empty()) {
    Fail(1, "simulate writes score files; --out <dir> is required");
  }
  tdcf_score_set* asv = nullptr;
  tdcf_score_set* cm = nullptr;
  Check(tdcf_simulate(&args.config, &asv, &cm));
  ScoreSetPtr asv_ptr(asv, &tdcf_score_set_free);
  ScoreSetPtr cm_ptr(cm, &tdcf_score_set_free);

  fs::create_directories(args.output.out_dir);
  const fs::path dir(args.output.out_dir);
  const std::string asv_path = (dir / "asv_scores.txt").string();
  Check(tdcf_score_set_write_file(asv, asv_path.c_str()));
  std::string cm_path;
  if (cm != nullptr) {
    cm_path = (dir / "cm_scores.txt").string();
    Check(tdcf_score_set_write_file(cm, cm_path.c_str()));
  }

  json manifest;
  manifest["subcommand"] = "simulate";
  manifest["tool_version"] = tdcf_version();
  manifest["timestamp"] = args.output.Timestamp();
  manifest["sim_config"] = json{
      {"p_e_asv", args.config.p_e_asv}, {"p_e_cm", args.config.p_e_cm},
      {"xi", args.config.xi},           {"n_tar", args.config.n_tar},
      {"n_non", args.config.n_non},     {"n_spoof", args.config.n_spoof}};
  manifest["seed"] = args.config.seed;
  json outputs = json::array();
  outputs.push_back(json{{"path", asv_path}, {"sha256", Sha256Hex(ReadFileBytes(asv_path))}});
  if (!cm_path.empty()) {
    outputs.push_back(json{{"path", cm_path}, {"sha256", Sha256Hex(ReadFileBytes(cm_path))}});
  }
  manifest["outputs"] = outputs;

  std::ofstream f(dir / "manifest.json", std::ios::binary);
  if (!f) Fail(1, "cannot write manifest");
  f << json{{"manifest", manifest}}.dump(2) << "\n";
}

// ---- select-thresholds -------------------------------------------------------

struct SelectArgs {
  std::string dev_asv_file, dev_cm_file, eval_asv_file, eval_cm_file;
  CostModelOptions cost;
  OutputOptions output;
};

// One column of the min/actual comparison: fix the ASV threshold by some
// policy, fix the CM threshold by another, evaluate on the eval sets.
json ComparisonEntry(const tdcf_cost_model* model, const tdcf_score_set* eval_asv,
                     const tdcf_score_set* eval_cm, const std::string& asv_policy,
                     double tau_asv, const std::string& cm_policy,
                     std::optional<double> fixed_tau_cm) {
  tdcf_asv_rates rates{};
  Check(tdcf_asv_error_rates(eval_asv, tau_asv, &rates));
  tdcf_coefficients coeffs{};
  Check(tdcf_compute_coefficients(model, &rates, &coeffs));

  double tau_cm = 0.0;
  tdcf_report report{};
  if (fixed_tau_cm.has_value()) {
    tau_cm = *fixed_tau_cm;
    Check(tdcf_actual(model, eval_asv, eval_cm, tau_asv, tau_cm, &report));
  } else {
    Check(tdcf_min_constrained(&coeffs, eval_cm, &report));
    tau_cm = report.argmin_tau_cm;
  }

  json entry;
  entry["asv_policy"] = asv_policy;
  entry["cm_policy"] = cm_policy;
  entry["tau_asv"] = JsonThreshold(tau_asv);
  entry["tau_cm"] = JsonThreshold(tau_cm);
  entry["asv_floor_normalized"] = coeffs.c0 / report.default_cost;
  entry["tdcf_normalized"] = report.normalized;
  entry["flags"] = FlagStrings(report.flags);
  return entry;
}

void RunSelectThresholds(const SelectArgs& args) {
  ScoreSetPtr dev_asv = ParseScoreFile(args.dev_asv_file, TDCF_SCORES_ASV);
  ScoreSetPtr dev_cm = ParseScoreFile(args.dev_cm_file, TDCF_SCORES_CM);
  ScoreSetPtr eval_asv = ParseScoreFile(args.eval_asv_file, TDCF_SCORES_ASV);
  ScoreSetPtr eval_cm = ParseScoreFile(args.eval_cm_file, TDCF_SCORES_CM);
  json source;
  ModelPtr model = ResolveCostModel(args.cost, &source);

  // Development-side selection: ASV threshold by minimum floor, CM threshold
  // by minimum constrained cost at that operating point.
  double tau_asv_dev = 0.0;
  Check(tdcf_select_asv_threshold(model.get(), dev_asv.get(), &tau_asv_dev));
  tdcf_asv_rates dev_rates{};
  Check(tdcf_asv_error_rates(dev_asv.get(), tau_asv_dev, &dev_rates));
  tdcf_coefficients dev_coeffs{};
  Check(tdcf_compute_coefficients(model.get(), &dev_rates, &dev_coeffs));
  double tau_cm_dev = 0.0;
  Check(tdcf_select_cm_threshold(&dev_coeffs, dev_cm.get(), &tau_cm_dev));

  tdcf_report actual{};
  Check(tdcf_actual(model.get(), eval_asv.get(), eval_cm.get(), tau_asv_dev,
                    tau_cm_dev, &actual));
  actual.flags |= ZeroSpoofPriorFlag(model.get(), eval_asv.get(), eval_cm.get());

  double eer_eval = 0.0, tau_eer_eval = 0.0;
  Check(tdcf_score_set_eer(eval_asv.get(), &eer_eval, &tau_eer_eval));
  double eer_dev = 0.0, tau_eer_dev = 0.0;
  Check(tdcf_score_set_eer(dev_asv.get(), &eer_dev, &tau_eer_dev));

  json comparison = json::array();
  comparison.push_back(ComparisonEntry(model.get(), eval_asv.get(), eval_cm.get(),
                                       "eer-eval", tau_eer_eval, "min-eval",
                                       std::nullopt));
  comparison.push_back(ComparisonEntry(model.get(), eval_asv.get(), eval_cm.get(),
                                       "eer-dev", tau_eer_dev, "min-eval",
                                       std::nullopt));
  comparison.push_back(ComparisonEntry(model.get(), eval_asv.get(), eval_cm.get(),
                                       "min-c0-dev", tau_asv_dev, "min-eval",
                                       std::nullopt));
  comparison.push_back(ComparisonEntry(model.get(), eval_asv.get(), eval_cm.get(),
                                       "min-c0-dev", tau_asv_dev, "min-dev",
                                       tau_cm_dev));

  ManifestBuilder manifest;
  manifest.subcommand = "select-thresholds";
  manifest.timestamp = args.output.Timestamp();
  manifest.cost_model_source = source;
  manifest.model = model.get();
  manifest.input_paths = {args.dev_asv_file, args.dev_cm_file,
                          args.eval_asv_file, args.eval_cm_file};

  json doc;
  doc["manifest"] = manifest.Build();
  doc["cost_model"] = CostModelJson(model.get());
  doc["selection"] = json{{"tau_asv", JsonThreshold(tau_asv_dev)},
                          {"tau_cm", JsonThreshold(tau_cm_dev)}};
  doc["comparison"] = comparison;
  json actual_obj;
  actual_obj["variant"] = "constrained";
  actual_obj["raw"] = actual.raw;
  actual_obj["default"] = actual.default_cost;
  actual_obj["normalized"] = actual.normalized;
  actual_obj["min_normalized"] = actual.min_normalized;
  actual_obj["argmin"] = json{{"tau_cm", JsonThreshold(actual.argmin_tau_cm)}};
  doc["actual_tdcf"] = actual_obj;
  doc["flags"] = FlagStrings(actual.flags);

  EmitJson(args.output, "selection.json", doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tandem detection cost function (t-DCF) toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("tdcf ") + tdcf_version());

  EvaluateArgs evaluate;
  CLI::App* cmd_evaluate = app.add_subcommand(
      "evaluate", "constrained min t-DCF report for an ASV/CM score file pair");
  cmd_evaluate->add_option("asv_file", evaluate.asv_file, "ASV score file")->required();
  cmd_evaluate->add_option("cm_file", evaluate.cm_file, "CM score file")->required();
  cmd_evaluate->add_option("--policy", evaluate.policy,
                           "ASV threshold policy: eer, min-c0, fixed:<value>");
  evaluate.cost.Register(cmd_evaluate);
  evaluate.output.Register(cmd_evaluate);

  SweepArgs sweep;
  CLI::App* cmd_sweep = app.add_subcommand(
      "sweep", "normalized unconstrained t-DCF surface over both threshold grids");
  cmd_sweep->add_option("asv_file", sweep.asv_file, "ASV score file")->required();
  cmd_sweep->add_option("cm_file", sweep.cm_file, "CM score file")->required();
  sweep.cost.Register(cmd_sweep);
  sweep.output.Register(cmd_sweep);

  CoefficientsArgs coefficients;
  CLI::App* cmd_coefficients = app.add_subcommand(
      "coefficients", "constrained-form coefficients over the ASV threshold grid");
  cmd_coefficients->add_option("asv_file", coefficients.asv_file, "ASV score file")
      ->required();
  cmd_coefficients->add_flag("--per-attack", coefficients.per_attack,
                             "one curve per attack id");
  coefficients.cost.Register(cmd_coefficients);
  coefficients.output.Register(cmd_coefficients);

  SimulateArgs simulate;
  CLI::App* cmd_simulate = app.add_subcommand(
      "simulate", "draw Gaussian-model score files (analytic-oracle data)");
  cmd_simulate->add_option("--eer-asv", simulate.config.p_e_asv,
                           "ASV target/nontarget EER (default 0.01)");
  cmd_simulate->add_option("--eer-cm", simulate.config.p_e_cm,
                           "CM bonafide/spoof EER (default 0.02)");
  cmd_simulate->add_option("--xi", simulate.config.xi,
                           "spoofing factor (default 0.85)");
  cmd_simulate->add_option("--n-tar", simulate.config.n_tar, "target trials");
  cmd_simulate->add_option("--n-non", simulate.config.n_non, "nontarget trials");
  cmd_simulate->add_option("--n-spoof", simulate.config.n_spoof, "spoof trials");
  cmd_simulate->add_option("--seed", simulate.config.seed, "RNG seed (default 1)");
  simulate.output.Register(cmd_simulate);

  SelectArgs select;
  CLI::App* cmd_select = app.add_subcommand(
      "select-thresholds",
      "dev-set threshold selection and eval-set actual t-DCF comparison");
  cmd_select->add_option("dev_asv", select.dev_asv_file, "development ASV scores")->required();
  cmd_select->add_option("dev_cm", select.dev_cm_file, "development CM scores")->required();
  cmd_select->add_option("eval_asv", select.eval_asv_file, "evaluation ASV scores")->required();
  cmd_select->add_option("eval_cm", select.eval_cm_file, "evaluation CM scores")->required();
  select.cost.Register(cmd_select);
  select.output.Register(cmd_select);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(cmd_evaluate)) RunEvaluate(evaluate);
    if (app.got_subcommand(cmd_sweep)) RunSweep(sweep);
    if (app.got_subcommand(cmd_coefficients)) RunCoefficients(coefficients);
    if (app.got_subcommand(cmd_simulate)) RunSimulate(simulate);
    if (app.got_subcommand(cmd_select)) RunSelectThresholds(select);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
