// src/capi.cc
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

// extern-C surface over the C++ core. All exceptions stop here and turn
// into status codes plus a thread-local message.

#include "tdcf/tdcf.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "cost_model.h"
#include "error.h"
#include "gaussian_sim.h"
#include "normal.h"
#include "score_data.h"
#include "tdcf_core.h"

struct tdcf_score_set {
  tdcf_score_kind kind;
  std::optional<tdcf::AsvScoreSet> asv;
  std::optional<tdcf::CmScoreSet> cm;
};

struct tdcf_cost_model {
  tdcf::CostModel model;
};

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

thread_local std::string g_last_error;

tdcf_status StatusOf(tdcf::ErrorCode code) {
  switch (code) {
    case tdcf::ErrorCode::kInvalidArgument: return TDCF_ERR_INVALID_ARGUMENT;
    case tdcf::ErrorCode::kParse: return TDCF_ERR_PARSE;
    case tdcf::ErrorCode::kIo: return TDCF_ERR_IO;
    case tdcf::ErrorCode::kDegenerateModel: return TDCF_ERR_DEGENERATE_MODEL;
  }
  return TDCF_ERR_INVALID_ARGUMENT;
}

template <typename Fn>
tdcf_status Wrap(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return TDCF_OK;
  } catch (const tdcf::Error& e) {
    g_last_error = e.what();
    return StatusOf(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TDCF_ERR_INVALID_ARGUMENT;
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw tdcf::Error(tdcf::ErrorCode::kInvalidArgument, what);
}

const tdcf::AsvScoreSet& AsvOf(const tdcf_score_set* set) {
  Require(set != nullptr, "score set is null");
  Require(set->kind == TDCF_SCORES_ASV, "score set is not an ASV set");
  return *set->asv;
}

const tdcf::CmScoreSet& CmOf(const tdcf_score_set* set) {
  Require(set != nullptr, "score set is null");
  Require(set->kind == TDCF_SCORES_CM, "score set is not a CM set");
  return *set->cm;
}

const tdcf::CostModel& ModelOf(const tdcf_cost_model* model) {
  Require(model != nullptr, "cost model is null");
  return model->model;
}

tdcf_asv_rates ToC(const tdcf::AsvErrorRates& r) {
  return {r.p_miss, r.p_fa, r.p_fa_spoof, r.threshold, r.spoof_free ? 1 : 0};
}

tdcf::AsvErrorRates FromC(const tdcf_asv_rates& r) {
  tdcf::AsvErrorRates out;
  out.p_miss = r.p_miss;
  out.p_fa = r.p_fa;
  out.p_fa_spoof = r.p_fa_spoof;
  out.threshold = r.threshold;
  out.spoof_free = r.spoof_free != 0;
  return out;
}

tdcf_cm_rates ToC(const tdcf::CmErrorRates& r) {
  return {r.p_miss, r.p_fa, r.threshold};
}

tdcf::CmErrorRates FromC(const tdcf_cm_rates& r) {
  return {r.p_miss, r.p_fa, r.threshold};
}

tdcf_coefficients ToC(const tdcf::TdcfCoefficients& c) {
  return {c.c0, c.c1, c.c2, ToC(c.asv)};
}

tdcf::TdcfCoefficients FromC(const tdcf_coefficients& c) {
  tdcf::TdcfCoefficients out;
  out.c0 = c.c0;
  out.c1 = c.c1;
  out.c2 = c.c2;
  out.asv = FromC(c.asv);
  return out;
}

tdcf_report ToC(const tdcf::TdcfReport& r) {
  tdcf_report out;
  out.variant = r.variant == tdcf::TdcfVariant::kUnconstrained
                    ? TDCF_VARIANT_UNCONSTRAINED
                    : TDCF_VARIANT_CONSTRAINED;
  out.raw = r.raw;
  out.default_cost = r.default_cost;
  out.normalized = r.normalized;
  out.min_normalized = r.min_normalized;
  out.tau_asv = r.tau_asv;
  out.tau_cm = r.tau_cm;
  out.argmin_tau_asv = r.argmin_tau_asv;
  out.argmin_tau_cm = r.argmin_tau_cm;
  out.flags = r.flags;
  return out;
}

tdcf::SimConfig FromC(const tdcf_sim_config& c) {
  tdcf::SimConfig out;
  out.p_e_asv = c.p_e_asv;
  out.p_e_cm = c.p_e_cm;
  out.xi = c.xi;
  out.n_tar = c.n_tar;
  out.n_non = c.n_non;
  out.n_spoof = c.n_spoof;
  out.seed = c.seed;
  return out;
}

tdcf_score_set* NewScoreSet(tdcf::AsvScoreSet set) {
  auto* out = new tdcf_score_set;
  out->kind = TDCF_SCORES_ASV;
  out->asv.emplace(std::move(set));
  return out;
}

tdcf_score_set* NewScoreSet(tdcf::CmScoreSet set) {
  auto* out = new tdcf_score_set;
  out->kind = TDCF_SCORES_CM;
  out->cm.emplace(std::move(set));
  return out;
}

tdcf_score_set* ParseSet(std::string_view text, tdcf_score_kind kind) {
  if (kind == TDCF_SCORES_ASV) return NewScoreSet(tdcf::ParseAsvScores(text));
  return NewScoreSet(tdcf::ParseCmScores(text));
}

std::string ReadFileOrThrow(const char* path) {
  Require(path != nullptr, "path is null");
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw tdcf::Error(tdcf::ErrorCode::kIo,
                      std::string("cannot open '") + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

template <typename T>
T* CopyToCArray(const std::vector<T>& v) {
  T* out = static_cast<T*>(std::malloc(sizeof(T) * std::max<size_t>(v.size(), 1)));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, v.data(), sizeof(T) * v.size());
  return out;
}

}  // namespace

extern "C" {

const char* tdcf_version(void) { return TDCF_VERSION_STRING; }

const char* tdcf_last_error(void) { return g_last_error.c_str(); }

void tdcf_free(void* ptr) { std::free(ptr); }

void tdcf_free_strings(char** strings, int64_t count) {
  if (strings == nullptr) return;
  for (int64_t i = 0; i < count; ++i) std::free(strings[i]);
  std::free(strings);
}

tdcf_status tdcf_cost_model_create(double pi_tar, double pi_spoof,
                                   double c_miss, double c_fa,
                                   double c_fa_spoof, tdcf_cost_model** out) {
  return Wrap([&] {
    Require(out != nullptr, "out pointer is null");
    *out = new tdcf_cost_model{
        tdcf::MakeCostModel(pi_tar, pi_spoof, c_miss, c_fa, c_fa_spoof)};
  });
}

tdcf_status tdcf_cost_model_asvspoof19(double pi_spoof,
                                       tdcf_cost_model** out) {
  return Wrap([&] {
    Require(out != nullptr, "out pointer is null");
    *out = new tdcf_cost_model{tdcf::Asvspoof19Model(pi_spoof)};
  });
}

void tdcf_cost_model_free(tdcf_cost_model* model) { delete model; }

void tdcf_cost_model_params(const tdcf_cost_model* model, double* pi_tar,
                            double* pi_non, double* pi_spoof, double* c_miss,
                            double* c_fa, double* c_fa_spoof) {
  if (model == nullptr) return;
  if (pi_tar) *pi_tar = model->model.pi_tar;
  if (pi_non) *pi_non = model->model.pi_non;
  if (pi_spoof) *pi_spoof = model->model.pi_spoof;
  if (c_miss) *c_miss = model->model.c_miss;
  if (c_fa) *c_fa = model->model.c_fa;
  if (c_fa_spoof) *c_fa_spoof = model->model.c_fa_spoof;
}

tdcf_status tdcf_score_set_parse_file(const char* path, tdcf_score_kind kind,
                                      tdcf_score_set** out) {
  return Wrap([&] {
    Require(out != nullptr, "out pointer is null");
    const std::string text = ReadFileOrThrow(path);
    *out = ParseSet(text, kind);
  });
}

tdcf_status tdcf_score_set_parse_buffer(const char* data, size_t size,
                                        tdcf_score_kind kind,
                                        tdcf_score_set** out) {
  return Wrap([&] {
    Require(out != nullptr, "out pointer is null");
    Require(data != nullptr || size == 0, "data pointer is null");
    *out = ParseSet(std::string_view(data, size), kind);
  });
}

void tdcf_score_set_free(tdcf_score_set* set) { delete set; }

tdcf_status tdcf_score_set_write_file(const tdcf_score_set* set,
                                      const char* path) {
  return Wrap([&] {
    Require(set != nullptr, "score set is null");
    Require(path != nullptr, "path is null");
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw tdcf::Error(tdcf::ErrorCode::kIo,
                        std::string("cannot write '") + path + "'");
    }
    const auto& records = set->kind == TDCF_SCORES_ASV
                              ? set->asv->records()
                              : set->cm->records();
    tdcf::WriteScores(records, out);
    out.flush();
    if (!out) {
      throw tdcf::Error(tdcf::ErrorCode::kIo,
                        std::string("error writing '") + path + "'");
    }
  });
}

tdcf_score_kind tdcf_score_set_kind(const tdcf_score_set* set) {
  return set == nullptr ? TDCF_SCORES_ASV : set->kind;
}

void tdcf_score_set_counts(const tdcf_score_set* set, int64_t* n_target,
                           int64_t* n_nontarget, int64_t* n_bonafide,
                           int64_t* n_spoof) {
  if (set == nullptr) return;
  int64_t tar = 0, non = 0, bona = 0, spoof = 0;
  if (set->kind == TDCF_SCORES_ASV) {
    tar = set->asv->num_target();
    non = set->asv->num_nontarget();
    spoof = set->asv->num_spoof();
  } else {
    tar = set->cm->num_target_labeled();
    non = set->cm->num_nontarget_labeled();
    bona = set->cm->num_bonafide();
    spoof = set->cm->num_spoof();
  }
  if (n_target) *n_target = tar;
  if (n_nontarget) *n_nontarget = non;
  if (n_bonafide) *n_bonafide = bona;
  if (n_spoof) *n_spoof = spoof;
}

int64_t tdcf_score_set_warning_count(const tdcf_score_set* set) {
  if (set == nullptr) return 0;
  return static_cast<int64_t>(set->kind == TDCF_SCORES_ASV
                                  ? set->asv->warnings().size()
                                  : set->cm->warnings().size());
}

const char* tdcf_score_set_warning(const tdcf_score_set* set, int64_t index) {
  if (set == nullptr || index < 0 ||
      index >= tdcf_score_set_warning_count(set)) {
    return nullptr;
  }
  const auto& w = set->kind == TDCF_SCORES_ASV ? set->asv->warnings()
                                               : set->cm->warnings();
  return w[static_cast<size_t>(index)].c_str();
}

tdcf_status tdcf_score_set_attacks(const tdcf_score_set* set, char*** out_ids,
                                   int64_t* out_count) {
  return Wrap([&] {
    Require(set != nullptr, "score set is null");
    Require(out_ids != nullptr && out_count != nullptr, "out pointer is null");
    const auto ids = set->kind == TDCF_SCORES_ASV ? set->asv->AttackIds()
                                                  : set->cm->AttackIds();
    char** arr = static_cast<char**>(
        std::malloc(sizeof(char*) * std::max<size_t>(ids.size(), 1)));
    if (arr == nullptr) throw std::bad_alloc();
    for (size_t i = 0; i < ids.size(); ++i) {
      arr[i] = static_cast<char*>(std::malloc(ids[i].size() + 1));
      if (arr[i] == nullptr) {
        tdcf_free_strings(arr, static_cast<int64_t>(i));
        throw std::bad_alloc();
      }
      std::memcpy(arr[i], ids[i].c_str(), ids[i].size() + 1);
    }
    *out_ids = arr;
    *out_count = static_cast<int64_t>(ids.size());
  });
}

tdcf_status tdcf_score_set_per_attack(const tdcf_score_set* set,
                                      const char* attack_id,
                                      tdcf_score_set** out) {
  return Wrap([&] {
    Require(set != nullptr, "score set is null");
    Require(attack_id != nullptr, "attack_id is null");
    Require(out != nullptr, "out pointer is null");
    if (set->kind == TDCF_SCORES_ASV) {
      *out = NewScoreSet(set->asv->PerAttack(attack_id));
    } else {
      *out = NewScoreSet(set->cm->PerAttack(attack_id));
    }
  });
}

tdcf_status tdcf_asv_error_rates(const tdcf_score_set* set, double tau,
                                 tdcf_asv_rates* out) {
  return Wrap([&] {
    Require(out != nullptr, "out pointer is null");
    *out = ToC(AsvOf(set).ErrorRates(tau));
  });
}

tdcf_status tdcf_cm_error_rates(const tdcf_score_set* set, double tau,
                                tdcf_cm_rates* out) {
  return Wrap([&] {
    Require(out != nullptr, "out pointer is null");
    *out = ToC(CmOf(set).ErrorRates(tau));
  });
}

tdcf_status tdcf_candidate_thresholds(const tdcf_score_set* set, double** out,
                                      int64_t* out_count) {
  return Wrap([&] {
    Require(set != nullptr, "score set is null");
    Require(out != nullptr && out_count != nullptr, "out pointer is null");
    const auto& taus = set->kind == TDCF_SCORES_ASV
                           ? set->asv->candidate_thresholds()
                           : set->cm->candidate_thresholds();
    *out = CopyToCArray(taus);
    *out_count = static_cast<int64_t>(taus.size());
  });
}

tdcf_status tdcf_asv_sweep(const tdcf_score_set* set, tdcf_asv_rates** out,
                           int64_t* out_count) {
  return Wrap([&] {
    Require(out != nullptr && out_count != nullptr, "out pointer is null");
    const auto sweep = AsvOf(set).Sweep();
    std::vector<tdcf_asv_rates> rates;
    rates.reserve(sweep.size());
    for (const auto& c : sweep) rates.push_back(ToC(c.ToRates()));
    *out = CopyToCArray(rates);
    *out_count = static_cast<int64_t>(rates.size());
  });
}

tdcf_status tdcf_cm_sweep(const tdcf_score_set* set, tdcf_cm_rates** out,
                          int64_t* out_count) {
  return Wrap([&] {
    Require(out != nullptr && out_count != nullptr, "out pointer is null");
    const auto sweep = CmOf(set).Sweep();
    std::vector<tdcf_cm_rates> rates;
    rates.reserve(sweep.size());
    for (const auto& c : sweep) rates.push_back(ToC(c.ToRates()));
    *out = CopyToCArray(rates);
    *out_count = static_cast<int64_t>(rates.size());
  });
}

tdcf_status tdcf_score_set_eer(const tdcf_score_set* set, double* eer,
                               double* threshold) {
  return Wrap([&] {
    Require(set != nullptr, "score set is null");
    const tdcf::EerResult r =
        set->kind == TDCF_SCORES_ASV ? set->asv->Eer() : set->cm->Eer();
    if (eer) *eer = r.eer;
    if (threshold) *threshold = r.threshold;
  });
}

void tdcf_tandem_error_probs(const tdcf_asv_rates* asv,
                             const tdcf_cm_rates* cm, tdcf_tandem_probs* out) {
  if (asv == nullptr || cm == nullptr || out == nullptr) return;
  const tdcf::TandemErrorProbs p =
      tdcf::ComputeTandemErrorProbs(FromC(*asv), FromC(*cm));
  *out = {p.p_a, p.p_b, p.p_c, p.p_d};
}

tdcf_status tdcf_unconstrained(const tdcf_cost_model* model,
                               const tdcf_asv_rates* asv,
                               const tdcf_cm_rates* cm, double* out) {
  return Wrap([&] {
    Require(asv != nullptr && cm != nullptr && out != nullptr,
            "argument pointer is null");
    *out = tdcf::TdcfUnconstrained(ModelOf(model), FromC(*asv), FromC(*cm));
  });
}

tdcf_status tdcf_default_unconstrained(const tdcf_cost_model* model,
                                       double* out) {
  return Wrap([&] {
    Require(out != nullptr, "out pointer is null");
    *out = tdcf::DefaultCostUnconstrained(ModelOf(model));
  });
}

tdcf_status tdcf_compute_coefficients(const tdcf_cost_model* model,
                                      const tdcf_asv_rates* asv,
                                      tdcf_coefficients* out) {
  return Wrap([&] {
    Require(asv != nullptr && out != nullptr, "argument pointer is null");
    *out = ToC(tdcf::ComputeCoefficients(ModelOf(model), FromC(*asv)));
  });
}

tdcf_status tdcf_constrained(const tdcf_coefficients* coeffs,
                             const tdcf_cm_rates* cm, double* out) {
  return Wrap([&] {
    Require(coeffs != nullptr && cm != nullptr && out != nullptr,
            "argument pointer is null");
    *out = tdcf::TdcfConstrained(FromC(*coeffs), FromC(*cm));
  });
}

tdcf_status tdcf_default_constrained(const tdcf_coefficients* coeffs,
                                     double* out) {
  return Wrap([&] {
    Require(coeffs != nullptr && out != nullptr, "argument pointer is null");
    *out = tdcf::DefaultCostConstrained(FromC(*coeffs));
  });
}

tdcf_status tdcf_normalize(double raw, double default_cost, double* out) {
  return Wrap([&] {
    Require(out != nullptr, "out pointer is null");
    *out = tdcf::Normalize(raw, default_cost);
  });
}

tdcf_status tdcf_nist_dcf(const tdcf_cost_model* model,
                          const tdcf_asv_rates* asv, double* out) {
  return Wrap([&] {
    Require(asv != nullptr && out != nullptr, "argument pointer is null");
    *out = tdcf::NistDcf(ModelOf(model), FromC(*asv));
  });
}

tdcf_status tdcf_min_unconstrained(const tdcf_cost_model* model,
                                   const tdcf_score_set* asv,
                                   const tdcf_score_set* cm,
                                   tdcf_report* out) {
  return Wrap([&] {
    Require(out != nullptr, "out pointer is null");
    *out = ToC(tdcf::MinTdcfUnconstrained(ModelOf(model), AsvOf(asv), CmOf(cm)));
  });
}

tdcf_status tdcf_min_constrained(const tdcf_coefficients* coeffs,
                                 const tdcf_score_set* cm, tdcf_report* out) {
  return Wrap([&] {
    Require(coeffs != nullptr && out != nullptr, "argument pointer is null");
    *out = ToC(tdcf::MinTdcfConstrained(FromC(*coeffs), CmOf(cm)));
  });
}

tdcf_status tdcf_select_asv_threshold(const tdcf_cost_model* model,
                                      const tdcf_score_set* dev_asv,
                                      double* out) {
  return Wrap([&] {
    Require(out != nullptr, "out pointer is null");
    *out = tdcf::SelectAsvThreshold(ModelOf(model), AsvOf(dev_asv));
  });
}

tdcf_status tdcf_select_cm_threshold(const tdcf_coefficients* coeffs,
                                     const tdcf_score_set* dev_cm,
                                     double* out) {
  return Wrap([&] {
    Require(coeffs != nullptr && out != nullptr, "argument pointer is null");
    *out = tdcf::SelectCmThreshold(FromC(*coeffs), CmOf(dev_cm));
  });
}

tdcf_status tdcf_actual(const tdcf_cost_model* model,
                        const tdcf_score_set* eval_asv,
                        const tdcf_score_set* eval_cm, double tau_asv,
                        double tau_cm, tdcf_report* out) {
  return Wrap([&] {
    Require(out != nullptr, "out pointer is null");
    *out = ToC(tdcf::ActualTdcf(ModelOf(model), AsvOf(eval_asv), CmOf(eval_cm),
                                tau_asv, tau_cm));
  });
}

tdcf_status tdcf_coefficient_curves(const tdcf_cost_model* model,
                                    const tdcf_score_set* asv,
                                    tdcf_coefficient_row** out,
                                    int64_t* out_count) {
  return Wrap([&] {
    Require(out != nullptr && out_count != nullptr, "out pointer is null");
    const auto rows = tdcf::CoefficientCurves(ModelOf(model), AsvOf(asv));
    std::vector<tdcf_coefficient_row> c_rows;
    c_rows.reserve(rows.size());
    for (const auto& r : rows) c_rows.push_back({r.tau_asv, r.c0, r.c1, r.c2});
    *out = CopyToCArray(c_rows);
    *out_count = static_cast<int64_t>(c_rows.size());
  });
}

double tdcf_normal_cdf(double x) { return tdcf::NormalCdf(x); }

tdcf_status tdcf_normal_quantile(double p, double* out) {
  return Wrap([&] {
    Require(out != nullptr, "out pointer is null");
    *out = tdcf::NormalQuantile(p);
  });
}

tdcf_status tdcf_mu_from_eer(double p_e, double* out) {
  return Wrap([&] {
    Require(out != nullptr, "out pointer is null");
    *out = tdcf::MuFromEer(p_e);
  });
}

tdcf_status tdcf_analytic_asv_rates(double mu_asv, double xi, double tau,
                                    tdcf_asv_rates* out) {
  return Wrap([&] {
    Require(out != nullptr, "out pointer is null");
    *out = ToC(tdcf::AnalyticAsvRates(mu_asv, xi, tau));
  });
}

tdcf_status tdcf_analytic_cm_rates(double mu_cm, double tau,
                                   tdcf_cm_rates* out) {
  return Wrap([&] {
    Require(out != nullptr, "out pointer is null");
    *out = ToC(tdcf::AnalyticCmRates(mu_cm, tau));
  });
}

tdcf_status tdcf_simulate(const tdcf_sim_config* config,
                          tdcf_score_set** asv_out, tdcf_score_set** cm_out) {
  return Wrap([&] {
    Require(config != nullptr, "config is null");
    Require(asv_out != nullptr && cm_out != nullptr, "out pointer is null");
    tdcf::SimulatedScores s = tdcf::SampleScores(FromC(*config));
    *asv_out = NewScoreSet(std::move(s.asv));
    *cm_out = s.cm.has_value() ? NewScoreSet(std::move(*s.cm)) : nullptr;
  });
}

tdcf_status tdcf_analytic_tdcf(const tdcf_sim_config* config,
                               const tdcf_cost_model* model, double tau_asv,
                               double tau_cm, tdcf_report* unconstrained_out,
                               tdcf_report* constrained_out,
                               tdcf_coefficients* coeffs_out) {
  return Wrap([&] {
    Require(config != nullptr, "config is null");
    const tdcf::AnalyticTdcfResult r =
        tdcf::AnalyticTdcf(FromC(*config), ModelOf(model), tau_asv, tau_cm);
    if (unconstrained_out != nullptr) {
      tdcf_report rep{};
      rep.variant = TDCF_VARIANT_UNCONSTRAINED;
      rep.raw = r.raw_unconstrained;
      rep.default_cost =
          tdcf::DefaultCostUnconstrained(ModelOf(model));
      rep.normalized = r.normalized_unconstrained;
      rep.min_normalized = kNaN;
      rep.tau_asv = tau_asv;
      rep.tau_cm = tau_cm;
      rep.argmin_tau_asv = kNaN;
      rep.argmin_tau_cm = kNaN;
      rep.flags = rep.normalized > 1.0 ? TDCF_FLAG_BADLY_CALIBRATED : 0;
      *unconstrained_out = rep;
    }
    if (constrained_out != nullptr) {
      tdcf_report rep{};
      rep.variant = TDCF_VARIANT_CONSTRAINED;
      rep.raw = r.raw_constrained;
      rep.default_cost = tdcf::DefaultCostConstrained(r.coefficients);
      rep.normalized = r.normalized_constrained;
      rep.min_normalized = kNaN;
      rep.tau_asv = tau_asv;
      rep.tau_cm = tau_cm;
      rep.argmin_tau_asv = kNaN;
      rep.argmin_tau_cm = kNaN;
      rep.flags = rep.normalized > 1.0 ? TDCF_FLAG_BADLY_CALIBRATED : 0;
      if (r.coefficients.c1 < 0.0) rep.flags |= TDCF_FLAG_NEGATIVE_C1;
      if (r.coefficients.c1 == 0.0 && r.coefficients.c2 == 0.0) {
        rep.flags |= TDCF_FLAG_CM_IRRELEVANT;
      }
      *constrained_out = rep;
    }
    if (coeffs_out != nullptr) *coeffs_out = ToC(r.coefficients);
  });
}

}  // extern "C"
