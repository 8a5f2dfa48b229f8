// src/tdcf_core.cc
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

#include "tdcf_core.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "error.h"

namespace tdcf {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

uint32_t CoefficientFlags(const TdcfCoefficients& coeffs) {
  uint32_t flags = 0;
  if (coeffs.asv.spoof_free) flags |= kFlagNoSpoofTrials;
  if (coeffs.c1 < 0.0) flags |= kFlagNegativeC1;
  if (coeffs.c1 == 0.0 && coeffs.c2 == 0.0) flags |= kFlagCmIrrelevant;
  return flags;
}
}  // namespace

TandemErrorProbs ComputeTandemErrorProbs(const AsvErrorRates& asv,
                                         const CmErrorRates& cm) {
  TandemErrorProbs p;
  p.p_a = (1.0 - cm.p_miss) * asv.p_miss;
  p.p_b = (1.0 - cm.p_miss) * asv.p_fa;
  p.p_c = cm.p_fa * asv.p_fa_spoof;
  p.p_d = cm.p_miss;
  return p;
}

double TdcfUnconstrained(const CostModel& model, const AsvErrorRates& asv,
                         const CmErrorRates& cm) {
  const TandemErrorProbs p = ComputeTandemErrorProbs(asv, cm);
  return model.c_miss * model.pi_tar * (p.p_a + p.p_d) +
         model.c_fa * model.pi_non * p.p_b +
         model.c_fa_spoof * model.pi_spoof * p.p_c;
}

double DefaultCostUnconstrained(const CostModel& model) {
  const double accept_all = model.c_fa * model.pi_non + model.c_fa_spoof * model.pi_spoof;
  const double reject_all = model.c_miss * model.pi_tar;
  const double d = std::min(accept_all, reject_all);
  if (d <= 0.0) {
    throw Error(ErrorCode::kDegenerateModel,
                "default system cost is not positive; normalization undefined");
  }
  return d;
}

TdcfCoefficients ComputeCoefficients(const CostModel& model,
                                     const AsvErrorRates& asv) {
  TdcfCoefficients c;
  c.c0 = model.pi_tar * model.c_miss * asv.p_miss +
         model.pi_non * model.c_fa * asv.p_fa;
  c.c1 = model.pi_tar * model.c_miss - c.c0;
  c.c2 = model.pi_spoof * model.c_fa_spoof * asv.p_fa_spoof;
  c.asv = asv;
  return c;
}

double TdcfConstrained(const TdcfCoefficients& coeffs, const CmErrorRates& cm) {
  return coeffs.c0 + coeffs.c1 * cm.p_miss + coeffs.c2 * cm.p_fa;
}

double DefaultCostConstrained(const TdcfCoefficients& coeffs) {
  const double d = coeffs.c0 + std::min(coeffs.c1, coeffs.c2);
  if (d <= 0.0) {
    throw Error(ErrorCode::kDegenerateModel,
                "constrained default cost is not positive; normalization undefined");
  }
  return d;
}

double Normalize(double raw, double default_cost) {
  if (!(default_cost > 0.0)) {
    throw Error(ErrorCode::kDegenerateModel,
                "normalization requires a positive default cost");
  }
  return raw / default_cost;
}

double NistDcf(const CostModel& model, const AsvErrorRates& asv) {
  if (model.pi_spoof != 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "NIST DCF requires pi_spoof = 0");
  }
  return model.c_miss * model.pi_tar * asv.p_miss +
         model.c_fa * (1.0 - model.pi_tar) * asv.p_fa;
}

TdcfReport MinTdcfUnconstrained(const CostModel& model, const AsvScoreSet& asv,
                                const CmScoreSet& cm) {
  const double default_cost = DefaultCostUnconstrained(model);
  const auto asv_sweep = asv.Sweep();
  const auto cm_sweep = cm.Sweep();
  std::vector<CmErrorRates> cm_rates;
  cm_rates.reserve(cm_sweep.size());
  for (const auto& c : cm_sweep) cm_rates.push_back(c.ToRates());

  double best = std::numeric_limits<double>::infinity();
  double best_asv = kNaN, best_cm = kNaN;
  for (const auto& a : asv_sweep) {
    const AsvErrorRates ar = a.ToRates();
    for (const auto& cr : cm_rates) {
      const double raw = TdcfUnconstrained(model, ar, cr);
      if (raw < best) {
        best = raw;
        best_asv = ar.threshold;
        best_cm = cr.threshold;
      }
    }
  }

  TdcfReport r;
  r.variant = TdcfVariant::kUnconstrained;
  r.raw = best;
  r.default_cost = default_cost;
  r.normalized = Normalize(best, default_cost);
  r.min_normalized = r.normalized;
  r.tau_asv = r.argmin_tau_asv = best_asv;
  r.tau_cm = r.argmin_tau_cm = best_cm;
  if (asv.num_spoof() == 0) r.flags |= kFlagNoSpoofTrials;
  if (model.pi_spoof == 0.0 && (asv.num_spoof() > 0 || cm.num_spoof() > 0)) {
    r.flags |= kFlagZeroSpoofPriorWithSpoofs;
  }
  return r;
}

TdcfReport MinTdcfConstrained(const TdcfCoefficients& coeffs,
                              const CmScoreSet& cm) {
  const double default_cost = DefaultCostConstrained(coeffs);
  double best = std::numeric_limits<double>::infinity();
  double best_cm = kNaN;
  for (const auto& c : cm.Sweep()) {
    const double raw = TdcfConstrained(coeffs, c.ToRates());
    if (raw < best) {
      best = raw;
      best_cm = c.threshold;
    }
  }

  TdcfReport r;
  r.variant = TdcfVariant::kConstrained;
  r.raw = best;
  r.default_cost = default_cost;
  r.normalized = Normalize(best, default_cost);
  r.min_normalized = r.normalized;
  r.tau_asv = coeffs.asv.threshold;
  r.argmin_tau_asv = kNaN;
  r.tau_cm = r.argmin_tau_cm = best_cm;
  r.flags = CoefficientFlags(coeffs);
  return r;
}

double SelectAsvThreshold(const CostModel& model, const AsvScoreSet& dev_asv) {
  double best_c0 = std::numeric_limits<double>::infinity();
  double best_tau = kNaN;
  for (const auto& a : dev_asv.Sweep()) {
    const AsvErrorRates ar = a.ToRates();
    const double c0 = model.pi_tar * model.c_miss * ar.p_miss +
                      model.pi_non * model.c_fa * ar.p_fa;
    if (c0 < best_c0) {
      best_c0 = c0;
      best_tau = ar.threshold;
    }
  }
  return best_tau;
}

double SelectCmThreshold(const TdcfCoefficients& coeffs,
                         const CmScoreSet& dev_cm) {
  double best = std::numeric_limits<double>::infinity();
  double best_tau = kNaN;
  for (const auto& c : dev_cm.Sweep()) {
    const double raw = TdcfConstrained(coeffs, c.ToRates());
    if (raw < best) {
      best = raw;
      best_tau = c.threshold;
    }
  }
  return best_tau;
}

TdcfReport ActualTdcf(const CostModel& model, const AsvScoreSet& eval_asv,
                      const CmScoreSet& eval_cm, double tau_asv,
                      double tau_cm) {
  const AsvErrorRates asv_rates = eval_asv.ErrorRates(tau_asv);
  const TdcfCoefficients coeffs = ComputeCoefficients(model, asv_rates);
  const double default_cost = DefaultCostConstrained(coeffs);
  const double raw = TdcfConstrained(coeffs, eval_cm.ErrorRates(tau_cm));

  TdcfReport r;
  r.variant = TdcfVariant::kConstrained;
  r.raw = raw;
  r.default_cost = default_cost;
  r.normalized = Normalize(raw, default_cost);
  r.tau_asv = tau_asv;
  r.tau_cm = tau_cm;

  // Evaluation-set minimum at the same ASV operating point, for reference.
  const TdcfReport min_report = MinTdcfConstrained(coeffs, eval_cm);
  r.min_normalized = min_report.min_normalized;
  r.argmin_tau_asv = kNaN;
  r.argmin_tau_cm = min_report.argmin_tau_cm;

  r.flags = CoefficientFlags(coeffs);
  if (r.normalized > 1.0) r.flags |= kFlagBadlyCalibrated;
  if (model.pi_spoof == 0.0 &&
      (eval_asv.num_spoof() > 0 || eval_cm.num_spoof() > 0)) {
    r.flags |= kFlagZeroSpoofPriorWithSpoofs;
  }
  return r;
}

std::vector<CoefficientRow> CoefficientCurves(const CostModel& model,
                                              const AsvScoreSet& asv) {
  std::vector<CoefficientRow> rows;
  const auto sweep = asv.Sweep();
  rows.reserve(sweep.size());
  for (const auto& a : sweep) {
    const TdcfCoefficients c = ComputeCoefficients(model, a.ToRates());
    rows.push_back({a.threshold, c.c0, c.c1, c.c2});
  }
  return rows;
}

}  // namespace tdcf
