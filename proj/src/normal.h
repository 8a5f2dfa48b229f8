// src/normal.h
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

#ifndef TDCF_SRC_NORMAL_H_
#define TDCF_SRC_NORMAL_H_

namespace tdcf {

// Standard normal CDF Phi(x), evaluated via erfc so the tails keep full
// precision.
double NormalCdf(double x);

// Survival function 1 - Phi(x), without the cancellation that the literal
// subtraction would suffer for large x.
double NormalSf(double x);

// Standard normal density.
double NormalPdf(double x);

/**
   Inverse standard normal CDF. Uses Acklam's rational approximation as the
   initial estimate, refined by one Newton step against NormalCdf, which
   brings the result to near machine precision over p in [1e-12, 1-1e-12].

   p == 0 and p == 1 return -inf / +inf; values outside [0,1] (or NaN) are
   rejected.
*/
double NormalQuantile(double p);

}  // namespace tdcf

#endif  // TDCF_SRC_NORMAL_H_
