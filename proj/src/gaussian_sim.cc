// src/gaussian_sim.cc
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

#include "gaussian_sim.h"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "error.h"

namespace tdcf {

namespace {

constexpr const char* kSimAttackId = "SIM";

// splitmix64 finalizer; derives independent sub-seeds per sample stream.
uint64_t SubSeed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Inverse-CDF sampling keeps the draw sequence identical across platforms,
// unlike std::normal_distribution.
class NormalStream {
 public:
  NormalStream(uint64_t seed, uint64_t stream, double mean, double stddev)
      : engine_(SubSeed(seed, stream)), mean_(mean), stddev_(stddev) {}

  double Next() {
    const uint64_t bits = engine_();
    const double u = (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
    return mean_ + stddev_ * NormalQuantile(u);
  }

 private:
  std::mt19937_64 engine_;
  double mean_, stddev_;
};

std::string TrialId(const char* prefix, int64_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s-%07lld", prefix,
                static_cast<long long>(index));
  return buf;
}

}  // namespace

void ValidateSimConfig(const SimConfig& config) {
  for (double p : {config.p_e_asv, config.p_e_cm}) {
    if (!(p > 0.0 && p < 0.5)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "simulator EERs must lie strictly inside (0, 0.5)");
    }
  }
  if (!std::isfinite(config.xi)) {
    throw Error(ErrorCode::kInvalidArgument, "spoofing factor must be finite");
  }
  if (config.n_tar < 1 || config.n_non < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "simulator needs at least one target and one nontarget trial");
  }
  if (config.n_spoof < 0) {
    throw Error(ErrorCode::kInvalidArgument, "n_spoof must be nonnegative");
  }
}

double MuFromEer(double p_e) {
  if (!(p_e > 0.0 && p_e < 0.5)) {
    throw Error(ErrorCode::kInvalidArgument,
                "EER must lie strictly inside (0, 0.5)");
  }
  const double q = NormalQuantile(1.0 - p_e);
  return 2.0 * q * q;
}

AsvErrorRates AnalyticAsvRates(double mu_asv, double xi, double tau) {
  if (!(mu_asv > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "mu must be positive");
  }
  const double sigma = std::sqrt(2.0 * mu_asv);
  AsvErrorRates r;
  r.p_miss = NormalCdf((tau - mu_asv) / sigma);
  r.p_fa = NormalSf((tau + mu_asv) / sigma);
  r.p_fa_spoof = NormalSf((tau - mu_asv * (2.0 * xi - 1.0)) / sigma);
  r.threshold = tau;
  return r;
}

CmErrorRates AnalyticCmRates(double mu_cm, double tau) {
  if (!(mu_cm > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "mu must be positive");
  }
  const double sigma = std::sqrt(2.0 * mu_cm);
  CmErrorRates r;
  r.p_miss = NormalCdf((tau - mu_cm) / sigma);
  r.p_fa = NormalSf((tau + mu_cm) / sigma);
  r.threshold = tau;
  return r;
}

SimulatedScores SampleScores(const SimConfig& config) {
  ValidateSimConfig(config);
  const double mu_asv = MuFromEer(config.p_e_asv);
  const double mu_cm = MuFromEer(config.p_e_cm);
  const double sd_asv = std::sqrt(2.0 * mu_asv);
  const double sd_cm = std::sqrt(2.0 * mu_cm);

  // Fixed stream ids per (system, class); adding classes later must not
  // renumber existing streams.
  NormalStream asv_tar(config.seed, 0, mu_asv, sd_asv);
  NormalStream asv_non(config.seed, 1, -mu_asv, sd_asv);
  NormalStream asv_spf(config.seed, 2, mu_asv * (2.0 * config.xi - 1.0), sd_asv);
  NormalStream cm_tar(config.seed, 3, mu_cm, sd_cm);
  NormalStream cm_non(config.seed, 4, mu_cm, sd_cm);
  NormalStream cm_spf(config.seed, 5, -mu_cm, sd_cm);

  std::vector<ScoreRecord> asv_records;
  std::vector<ScoreRecord> cm_records;
  asv_records.reserve(config.n_tar + config.n_non + config.n_spoof);
  cm_records.reserve(config.n_tar + config.n_non + config.n_spoof);

  for (int64_t i = 0; i < config.n_tar; ++i) {
    const std::string id = TrialId("tar", i);
    asv_records.push_back({id, TrialClass::kTarget, asv_tar.Next(), ""});
    cm_records.push_back({id, TrialClass::kTarget, cm_tar.Next(), ""});
  }
  for (int64_t i = 0; i < config.n_non; ++i) {
    const std::string id = TrialId("non", i);
    asv_records.push_back({id, TrialClass::kNontarget, asv_non.Next(), ""});
    cm_records.push_back({id, TrialClass::kNontarget, cm_non.Next(), ""});
  }
  for (int64_t i = 0; i < config.n_spoof; ++i) {
    const std::string id = TrialId("spf", i);
    asv_records.push_back({id, TrialClass::kSpoof, asv_spf.Next(), kSimAttackId});
    cm_records.push_back({id, TrialClass::kSpoof, cm_spf.Next(), kSimAttackId});
  }

  SimulatedScores out{AsvScoreSet(std::move(asv_records)), std::nullopt};
  if (config.n_spoof > 0) {
    out.cm.emplace(std::move(cm_records));
  }
  return out;
}

AnalyticTdcfResult AnalyticTdcf(const SimConfig& config, const CostModel& model,
                                double tau_asv, double tau_cm) {
  ValidateSimConfig(config);
  const double mu_asv = MuFromEer(config.p_e_asv);
  const double mu_cm = MuFromEer(config.p_e_cm);

  AnalyticTdcfResult r;
  r.asv = AnalyticAsvRates(mu_asv, config.xi, tau_asv);
  r.cm = AnalyticCmRates(mu_cm, tau_cm);
  r.coefficients = ComputeCoefficients(model, r.asv);
  r.raw_unconstrained = TdcfUnconstrained(model, r.asv, r.cm);
  r.normalized_unconstrained =
      Normalize(r.raw_unconstrained, DefaultCostUnconstrained(model));
  r.raw_constrained = TdcfConstrained(r.coefficients, r.cm);
  r.normalized_constrained =
      Normalize(r.raw_constrained, DefaultCostConstrained(r.coefficients));
  return r;
}

}  // namespace tdcf
