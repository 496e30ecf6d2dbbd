// Copyright 2026 The egfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "egfkit/bigfloat.hpp"

namespace egfkit {

/// Partial-sum trace of the forward-difference zeta series
///   zeta(s) = e * sum_{n>=0} sum_{i=0}^{n} (-1)^{n-i} / ((n-i)! (1+i)^s)
/// together with the deviation from an independent reference evaluation.
struct ZetaReport {
  BigComplex s;
  std::size_t terms_used = 0;            // N
  std::vector<BigComplex> partial_sums;  // T_0 .. T_N, T_n = e * sum of rows <= n
  BigComplex final;                      // = partial_sums[N]
  BigComplex reference;
  BigReal abs_error;                     // |final - reference|

  ZetaReport() : s(128), final(128), reference(128), abs_error(128) {}
};

/// Evaluates the double-sum series through row N at `prec` output bits.
/// Summation is fully deterministic: rows ascend in n, inner terms ascend in
/// i, the factor e is applied last; working precision adds
/// max(32, ceil(1.5 N)) guard bits against the alternating cancellation.
///
/// Throws std::domain_error("pole of zeta") at s = 1 and
/// std::invalid_argument("prec too small") below 53 bits.
ZetaReport zeta_via_differences(const BigComplex& s, std::size_t N, mpfr_prec_t prec);

/// Independent reference value: exact Bernoulli path at nonpositive integer
/// arguments, otherwise the accelerated alternating (eta) series combined
/// with zeta(s) = eta(s)/(1 - 2^{1-s}).
BigComplex zeta_reference(const BigComplex& s, mpfr_prec_t prec);

/// Full partial-sum trace for convergence studies; identical contract to
/// zeta_via_differences with N = N_max. No accuracy is promised outside
/// Re(s) > 1 -- the output is diagnostic data.
ZetaReport convergence_report(const BigComplex& s, std::size_t N_max, mpfr_prec_t prec);

/// |T_n - reference| for each stored partial sum.
std::vector<BigReal> partial_sum_errors(const ZetaReport& report);

}  // namespace egfkit
