// src/tdcf_core.h
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

#ifndef TDCF_SRC_TDCF_CORE_H_
#define TDCF_SRC_TDCF_CORE_H_

#include <cstdint>
#include <vector>

#include "cost_model.h"
#include "score_data.h"

namespace tdcf {

// Probabilities of the four erroneous tandem outcomes under the CM/ASV
// independence assumption:
//   p_a  CM passes a target, ASV misses it
//   p_b  CM passes a nontarget, ASV falsely accepts it
//   p_c  both systems falsely accept a spoof
//   p_d  CM misses a target (ASV never sees it)
struct TandemErrorProbs {
  double p_a = 0.0, p_b = 0.0, p_c = 0.0, p_d = 0.0;
};

// Coefficients of the ASV-constrained affine form
// cost(tau_cm) = c0 + c1 * P_miss_cm + c2 * P_fa_cm.
// c0 is the ASV floor; c1 = beta - c0 may be negative; c2 >= 0.
struct TdcfCoefficients {
  double c0 = 0.0, c1 = 0.0, c2 = 0.0;
  AsvErrorRates asv;  // operating point the coefficients were built from
};

enum class TdcfVariant { kUnconstrained, kConstrained };

// Report flag bits (mirrored by the C API).
enum TdcfFlags : uint32_t {
  kFlagBadlyCalibrated = 1u << 0,        // normalized cost exceeds 1
  kFlagNoSpoofTrials = 1u << 1,          // ASV set had no spoof trials
  kFlagNegativeC1 = 1u << 2,             // constrained min sits at a boundary
  kFlagCmIrrelevant = 1u << 3,           // c1 == c2 == 0
  kFlagZeroSpoofPriorWithSpoofs = 1u << 4,
};

struct TdcfReport {
  TdcfVariant variant = TdcfVariant::kConstrained;
  double raw = 0.0;           // cost at the report's operating point
  double default_cost = 0.0;
  double normalized = 0.0;    // raw / default_cost
  double min_normalized = 0.0;
  double tau_asv = 0.0, tau_cm = 0.0;  // operating point (NaN when n/a)
  double argmin_tau_asv = 0.0, argmin_tau_cm = 0.0;  // minimizers (NaN when n/a)
  uint32_t flags = 0;
};

struct CoefficientRow {
  double tau_asv = 0.0, c0 = 0.0, c1 = 0.0, c2 = 0.0;
};

TandemErrorProbs ComputeTandemErrorProbs(const AsvErrorRates& asv,
                                         const CmErrorRates& cm);

// Expected cost of the tandem system with both thresholds free.
double TdcfUnconstrained(const CostModel& model, const AsvErrorRates& asv,
                         const CmErrorRates& cm);

// Cost of the better of the accept-all / reject-all dummy systems; the
// normalizer of the unconstrained form. Zero is a degenerate-model error.
double DefaultCostUnconstrained(const CostModel& model);

TdcfCoefficients ComputeCoefficients(const CostModel& model,
                                     const AsvErrorRates& asv);

double TdcfConstrained(const TdcfCoefficients& coeffs, const CmErrorRates& cm);

// c0 + min{c1, c2}: best dummy CM with the ASV operating point fixed.
double DefaultCostConstrained(const TdcfCoefficients& coeffs);

double Normalize(double raw, double default_cost);

// The NIST DCF special case: no spoofing anticipated (pi_spoof must be 0).
double NistDcf(const CostModel& model, const AsvErrorRates& asv);

/**
   Minimum normalized unconstrained t-DCF over the Cartesian product of both
   candidate-threshold grids (infinities included); exhausts every empirical
   operating point. Ties resolved toward (smaller tau_asv, then smaller
   tau_cm). The result never exceeds 1: the grid contains the dummy systems.
*/
TdcfReport MinTdcfUnconstrained(const CostModel& model, const AsvScoreSet& asv,
                                const CmScoreSet& cm);

// Same over the CM candidate list only, for a fixed ASV operating point.
TdcfReport MinTdcfConstrained(const TdcfCoefficients& coeffs,
                              const CmScoreSet& cm);

// Development-side threshold selection: ASV threshold minimizing the ASV
// floor c0, then CM threshold minimizing the constrained cost. Smaller
// threshold wins ties.
double SelectAsvThreshold(const CostModel& model, const AsvScoreSet& dev_asv);
double SelectCmThreshold(const TdcfCoefficients& coeffs,
                         const CmScoreSet& dev_cm);

/**
   Normalized constrained t-DCF on evaluation data at externally fixed
   thresholds (no minimization of the operating point; the report still
   carries the evaluation-set minimum for reference). Values above 1 are
   flagged rather than clamped.
*/
TdcfReport ActualTdcf(const CostModel& model, const AsvScoreSet& eval_asv,
                      const CmScoreSet& eval_cm, double tau_asv, double tau_cm);

// (tau_asv, c0, c1, c2) at every ASV candidate threshold, in threshold order.
std::vector<CoefficientRow> CoefficientCurves(const CostModel& model,
                                              const AsvScoreSet& asv);

}  // namespace tdcf

#endif  // TDCF_SRC_TDCF_CORE_H_
