// src/cost_model.cc
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

#include "cost_model.h"

#include <cmath>

#include "error.h"

namespace tdcf {

CostModel MakeCostModel(double pi_tar, double pi_spoof, double c_miss,
                        double c_fa, double c_fa_spoof) {
  if (!std::isfinite(pi_tar) || pi_tar < 0.0 || pi_tar > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "pi_tar must be in [0, 1]");
  }
  if (!std::isfinite(pi_spoof) || pi_spoof < 0.0 || pi_spoof > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "pi_spoof must be in [0, 1]");
  }
  double pi_non = 1.0 - pi_tar - pi_spoof;
  if (pi_non < 0.0) {
    // Tolerate rounding residue from user-supplied priors that sum to one.
    if (pi_non > -1e-12) {
      pi_non = 0.0;
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "pi_tar + pi_spoof must not exceed 1");
    }
  }
  for (double c : {c_miss, c_fa, c_fa_spoof}) {
    if (!std::isfinite(c) || c < 0.0) {
      throw Error(ErrorCode::kInvalidArgument, "costs must be nonnegative");
    }
  }
  CostModel m;
  m.pi_tar = pi_tar;
  m.pi_non = pi_non;
  m.pi_spoof = pi_spoof;
  m.c_miss = c_miss;
  m.c_fa = c_fa;
  m.c_fa_spoof = c_fa_spoof;
  if (m.beta() <= 0.0 && m.c_fa * m.pi_non + m.gamma() <= 0.0) {
    throw Error(ErrorCode::kDegenerateModel,
                "both dummy systems cost 0; normalization undefined");
  }
  return m;
}

CostModel Asvspoof19Model(double pi_spoof) {
  if (!std::isfinite(pi_spoof) || pi_spoof < 0.0 || pi_spoof >= 1.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "asvspoof19 preset requires pi_spoof in [0, 1)");
  }
  return MakeCostModel((1.0 - pi_spoof) * 0.99, pi_spoof, 1.0, 10.0, 10.0);
}

}  // namespace tdcf
