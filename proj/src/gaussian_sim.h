// src/gaussian_sim.h
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

#ifndef TDCF_SRC_GAUSSIAN_SIM_H_
#define TDCF_SRC_GAUSSIAN_SIM_H_

#include <cstdint>
#include <optional>

#include "cost_model.h"
#include "normal.h"
#include "score_data.h"
#include "tdcf_core.h"

namespace tdcf {

/**
   Constrained-Gaussian score simulator. Each system's class-conditional
   score distributions are tied to a single mean parameter mu > 0:

     target    N(+mu, 2*mu)
     nontarget N(-mu, 2*mu)
     spoof     N(mu*(2*xi - 1), 2*mu)   (ASV side; xi is the spoofing factor)

   so the variance equals twice the mean and the target/nontarget EER alone
   determines mu. The CM side uses the same construction with bona fide as
   the positive class. This closed-form model is the analytic oracle for the
   empirical pipeline.
*/
struct SimConfig {
  double p_e_asv = 0.01;  // ASV target/nontarget EER, in (0, 0.5)
  double p_e_cm = 0.02;   // CM bonafide/spoof EER, in (0, 0.5)
  double xi = 0.85;       // spoofing factor; unbounded (xi=0 nontarget-like,
                          // xi=1 target-like)
  int64_t n_tar = 100000;
  int64_t n_non = 100000;
  int64_t n_spoof = 100000;  // 0 allowed: spoof-free ASV set, no CM set
  uint64_t seed = 1;
};

// mu = 2 * [Phi^-1(1 - p_e)]^2, the unique tied-Gaussian mean with analytic
// EER p_e. Boundary EERs are rejected (variance would degenerate).
double MuFromEer(double p_e);

// Closed-form error rates of the tied-Gaussian model at threshold tau.
AsvErrorRates AnalyticAsvRates(double mu_asv, double xi, double tau);
CmErrorRates AnalyticCmRates(double mu_cm, double tau);

struct SimulatedScores {
  AsvScoreSet asv;
  std::optional<CmScoreSet> cm;  // absent when n_spoof == 0
};

/**
   Draws the configured trial counts from the class distributions of both
   systems, independently per system. Deterministic in the seed: each
   (system, class) stream derives its own sub-seed, so generation order is
   schedule-independent. Spoof records carry attack id "SIM".
*/
SimulatedScores SampleScores(const SimConfig& config);

// t-DCF of the analytic rates at one threshold pair, in both variants.
struct AnalyticTdcfResult {
  AsvErrorRates asv;
  CmErrorRates cm;
  TdcfCoefficients coefficients;
  double raw_unconstrained = 0.0;
  double normalized_unconstrained = 0.0;
  double raw_constrained = 0.0;
  double normalized_constrained = 0.0;
};

AnalyticTdcfResult AnalyticTdcf(const SimConfig& config, const CostModel& model,
                                double tau_asv, double tau_cm);

void ValidateSimConfig(const SimConfig& config);

}  // namespace tdcf

#endif  // TDCF_SRC_GAUSSIAN_SIM_H_
