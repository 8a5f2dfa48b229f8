// src/cost_model.h
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

#ifndef TDCF_SRC_COST_MODEL_H_
#define TDCF_SRC_COST_MODEL_H_

namespace tdcf {

// The five evaluation parameters (pi_tar, pi_spoof, C_miss, C_fa, C_fa,spoof)
// with pi_non derived as 1 - pi_tar - pi_spoof. Costs are monetary-loss
// units per error; priors are asserted class frequencies.
struct CostModel {
  double pi_tar = 0.0;
  double pi_non = 0.0;
  double pi_spoof = 0.0;
  double c_miss = 0.0;
  double c_fa = 0.0;
  double c_fa_spoof = 0.0;

  // Shorthands of the EER-point coefficient rewrite.
  double alpha() const { return pi_tar * c_miss + pi_non * c_fa; }
  double beta() const { return pi_tar * c_miss; }
  double gamma() const { return pi_spoof * c_fa_spoof; }
};

/**
   Validates and builds a cost model. Requires priors in [0,1] with
   pi_non = 1 - pi_tar - pi_spoof >= 0, nonnegative costs, and at least one
   of the two dummy-system costs (beta, c_fa*pi_non + gamma) positive so
   normalization can be defined somewhere.
*/
CostModel MakeCostModel(double pi_tar, double pi_spoof, double c_miss,
                        double c_fa, double c_fa_spoof);

// The 'asvspoof19' preset: a banking application with C_miss=1,
// C_fa=C_fa,spoof=10, pi_tar=(1-pi_spoof)*0.99 and the remainder on pi_non.
CostModel Asvspoof19Model(double pi_spoof);

}  // namespace tdcf

#endif  // TDCF_SRC_COST_MODEL_H_
