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

#include <doctest.h>

#include <stdexcept>

#include "egfkit/zeta_series.hpp"

using egfkit::BigComplex;
using egfkit::BigReal;
using egfkit::ZetaReport;

namespace {

// 50-digit references computed with an independent multiprecision tool.
constexpr const char* kZeta2 = "1.6449340668482264364724151666460251892189499012068";
constexpr const char* kZeta3 = "1.2020569031595942853997381615114499907649862923405";
constexpr const char* kZeta4 = "1.0823232337111381915160036965411679027747509519187";
constexpr const char* kZetaHalf = "-1.4603545088095868128894991525152980124672293310126";
constexpr const char* kE = "2.7182818284590452353602874713526624977572470937";

BigReal tol10(long exponent, mpfr_prec_t prec) {
  return BigReal::from_string("1e" + std::to_string(exponent), prec);
}

}  // namespace

TEST_CASE("reference evaluator against frozen digits") {
  const mpfr_prec_t prec = 192;
  const BigReal tol = tol10(-45, prec);
  CHECK(abs(egfkit::zeta_reference(BigComplex(BigReal(2L, prec)), prec).real() -
            BigReal::from_string(kZeta2, prec)) < tol);
  CHECK(abs(egfkit::zeta_reference(BigComplex(BigReal(3L, prec)), prec).real() -
            BigReal::from_string(kZeta3, prec)) < tol);
  CHECK(abs(egfkit::zeta_reference(BigComplex(BigReal(4L, prec)), prec).real() -
            BigReal::from_string(kZeta4, prec)) < tol);
  CHECK(abs(egfkit::zeta_reference(BigComplex(BigReal(0.5, prec)), prec).real() -
            BigReal::from_string(kZetaHalf, prec)) < tol);
}

TEST_CASE("reference evaluator exact path at nonpositive integers") {
  const mpfr_prec_t prec = 128;
  CHECK(egfkit::zeta_reference(BigComplex(BigReal(0L, prec)), prec).real() ==
        BigReal(-0.5, prec));
  const BigReal minus_twelfth = BigReal(egfkit::Rational(-1, 12), prec);
  CHECK(egfkit::zeta_reference(BigComplex(BigReal(-1L, prec)), prec).real() == minus_twelfth);
  CHECK(egfkit::zeta_reference(BigComplex(BigReal(-2L, prec)), prec).real().is_zero());
}

TEST_CASE("reference evaluator rejects bad arguments") {
  const mpfr_prec_t prec = 128;
  CHECK_THROWS_AS(egfkit::zeta_reference(BigComplex(BigReal(1L, prec)), prec), std::domain_error);
  CHECK_THROWS_AS(egfkit::zeta_reference(BigComplex(BigReal(2L, prec)), 32), std::invalid_argument);
}

TEST_CASE("single-row evaluation is e") {
  const mpfr_prec_t prec = 128;
  const ZetaReport report = egfkit::zeta_via_differences(BigComplex(BigReal(7L, prec)), 0, prec);
  CHECK(report.partial_sums.size() == 1);
  CHECK(abs(report.final.real() - BigReal::from_string(kE, prec)) < BigReal::pow2(-120, prec));
  CHECK(report.final.imag().is_zero());
}

TEST_CASE("series evaluation at desk scale") {
  const mpfr_prec_t prec = 128;
  const BigReal tol = tol10(-8, prec);
  for (long s : {2L, 3L, 4L}) {
    const ZetaReport report = egfkit::zeta_via_differences(BigComplex(BigReal(s, prec)), 40, prec);
    CHECK(report.terms_used == 40);
    CHECK(report.partial_sums.size() == 41);
    CHECK(report.final == report.partial_sums.back());
    CHECK(report.abs_error < tol);
  }
  // against the known constant, not the reference path
  const ZetaReport basel = egfkit::zeta_via_differences(BigComplex(BigReal(2L, prec)), 40, prec);
  const BigReal pi = BigReal::pi(prec);
  CHECK(abs(basel.final.real() - pi * pi / BigReal(6L, prec)) < tol);
}

TEST_CASE("series evaluation is deterministic") {
  const mpfr_prec_t prec = 128;
  const BigComplex s(BigReal(3L, prec));
  const ZetaReport a = egfkit::zeta_via_differences(s, 25, prec);
  const ZetaReport b = egfkit::zeta_via_differences(s, 25, prec);
  CHECK(a.final == b.final);
  CHECK(a.final.real().str() == b.final.real().str());
  for (std::size_t n = 0; n < a.partial_sums.size(); ++n) {
    CHECK(a.partial_sums[n] == b.partial_sums[n]);
  }
}

TEST_CASE("series pole and precision guards") {
  const mpfr_prec_t prec = 128;
  CHECK_THROWS_AS(egfkit::zeta_via_differences(BigComplex(BigReal(1L, prec)), 10, prec),
                  std::domain_error);
  CHECK_THROWS_AS(egfkit::zeta_via_differences(BigComplex(BigReal(2L, prec)), 10, 40),
                  std::invalid_argument);
}

TEST_CASE("convergence report traces") {
  const mpfr_prec_t prec = 128;
  const ZetaReport report = egfkit::convergence_report(BigComplex(BigReal(2L, prec)), 40, prec);
  const auto errors = egfkit::partial_sum_errors(report);
  CHECK(errors.size() == 41);
  CHECK(errors[40] < errors[10]);
  CHECK(errors[40] < tol10(-8, prec));

  // large real part: the tail beyond 1 + 2^{-30} is far below 1e-8
  const ZetaReport big_s = egfkit::convergence_report(BigComplex(BigReal(30L, prec)), 40, prec);
  const BigReal expected = BigReal(1L, prec) + BigReal::pow2(-30, prec);
  CHECK(abs(big_s.final.real() - expected) < tol10(-8, prec));

  // diagnostic-only domain: the report must come back, no accuracy asserted
  const ZetaReport half = egfkit::convergence_report(BigComplex(BigReal(0.5, prec)), 20, prec);
  CHECK(half.partial_sums.size() == 21);
}

TEST_CASE("complex argument with real part above one") {
  const mpfr_prec_t prec = 128;
  // zeta(2+3i), digits from an independent multiprecision tool
  const BigComplex s(BigReal(2L, prec), BigReal(3L, prec));
  const ZetaReport report = egfkit::zeta_via_differences(s, 60, prec);
  const BigReal re = BigReal::from_string("0.79802198514627572062229450072481268602522008160838", prec);
  const BigReal im = BigReal::from_string("-0.11374430805293850021591336585731507557013780639967", prec);
  CHECK(abs(report.final.real() - re) < tol10(-8, prec));
  CHECK(abs(report.final.imag() - im) < tol10(-8, prec));
  CHECK(report.abs_error < tol10(-8, prec));
}
