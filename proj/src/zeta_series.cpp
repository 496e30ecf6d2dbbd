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

#include "egfkit/zeta_series.hpp"

#include <cmath>
#include <stdexcept>

#include "egfkit/zeta_special.hpp"

namespace egfkit {

namespace {

bool is_one(const BigComplex& s) {
  return s.is_real() && s.real().is_integer() && !s.real().is_nan() &&
         s.real().to_long() == 1;
}

mpfr_prec_t guarded_prec(mpfr_prec_t prec, std::size_t N) {
  const auto guard = static_cast<mpfr_prec_t>((3 * N + 1) / 2);
  return prec + std::max<mpfr_prec_t>(32, guard);
}

// Alternating-series acceleration after Cohen, Rodriguez Villegas and
// Zagier: sum_{k>=0} (-1)^k a_k with a_k = (k+1)^{-s}, i.e. eta(s).
BigComplex eta_accelerated(const BigComplex& s, mpfr_prec_t wp, mpfr_prec_t target_bits) {
  const auto n = static_cast<unsigned long>(
      std::ceil(static_cast<double>(target_bits) * 0.3933) + 6);
  BigReal d = pow_ui(BigReal(3L, wp) + sqrt(BigReal(8L, wp)), n);
  d = (d + BigReal(1L, wp) / d) / BigReal(2L, wp);
  BigReal b(-1L, wp);
  BigReal c = -d;
  const BigComplex minus_s = -s.round_to(wp);
  BigComplex acc(wp);
  for (unsigned long k = 0; k < n; ++k) {
    c = b - c;
    const BigComplex term = pow_real_base(BigReal(static_cast<long>(k) + 1, wp), minus_s);
    acc += term * c;
    const BigReal kr(static_cast<long>(k), wp);
    const BigReal nr(static_cast<long>(n), wp);
    b = (kr + nr) * (kr - nr) * b /
        ((kr + BigReal(0.5, wp)) * (kr + BigReal(1L, wp)));
  }
  return acc / d;
}

}  // namespace

BigComplex zeta_reference(const BigComplex& s, mpfr_prec_t prec) {
  if (prec < 53) {
    throw std::invalid_argument("prec too small");
  }
  if (is_one(s)) {
    throw std::domain_error("pole of zeta");
  }
  if (s.is_real() && s.real().is_integer() && s.real().sign() <= 0) {
    const long arg = s.real().to_long();
    if (arg < -4096) {
      throw std::invalid_argument("negative integer argument too large for the exact path");
    }
    return BigComplex(BigReal(zeta_neg(static_cast<std::size_t>(-arg)), prec));
  }
  const mpfr_prec_t wp = prec + 32;
  const BigComplex eta = eta_accelerated(s, wp, prec + 16);
  const BigComplex one_minus_s = BigComplex(BigReal(1L, wp)) - s.round_to(wp);
  const BigComplex denom =
      BigComplex(BigReal(1L, wp)) - pow_real_base(BigReal(2L, wp), one_minus_s);
  if (abs(denom) < BigReal::pow2(-static_cast<long>(wp) / 2, wp)) {
    throw std::domain_error("eta-to-zeta denominator vanishes at this s");
  }
  return (eta / denom).round_to(prec);
}

ZetaReport zeta_via_differences(const BigComplex& s, std::size_t N, mpfr_prec_t prec) {
  if (prec < 53) {
    throw std::invalid_argument("prec too small");
  }
  if (is_one(s)) {
    throw std::domain_error("pole of zeta");
  }
  const mpfr_prec_t wp = guarded_prec(prec, N);

  // (1+i)^{-s} for i = 0..N, and 1/m! for m = 0..N, all at working precision
  const BigComplex minus_s = -s.round_to(wp);
  std::vector<BigComplex> powers;
  powers.reserve(N + 1);
  for (std::size_t i = 0; i <= N; ++i) {
    powers.push_back(pow_real_base(BigReal(static_cast<long>(i) + 1, wp), minus_s));
  }
  std::vector<BigReal> inv_fact;
  inv_fact.reserve(N + 1);
  mpz_class fact = 1;
  for (std::size_t m = 0; m <= N; ++m) {
    if (m > 0) {
      fact *= static_cast<unsigned long>(m);
    }
    inv_fact.push_back(BigReal(1L, wp) / BigReal(fact, wp));
  }

  const BigReal e_const = BigReal::e(wp);
  ZetaReport report;
  report.s = s.round_to(prec);
  report.terms_used = N;
  report.partial_sums.reserve(N + 1);
  BigComplex running(wp);
  for (std::size_t n = 0; n <= N; ++n) {
    BigComplex inner(wp);
    for (std::size_t i = 0; i <= n; ++i) {
      const BigComplex term = powers[i] * inv_fact[n - i];
      if ((n - i) % 2 == 0) {
        inner += term;
      } else {
        inner += -term;
      }
    }
    running += inner;
    report.partial_sums.push_back((running * e_const).round_to(prec));
  }
  report.final = report.partial_sums.back();
  report.reference = zeta_reference(s, prec);
  report.abs_error = abs(report.final - report.reference);
  return report;
}

ZetaReport convergence_report(const BigComplex& s, std::size_t N_max, mpfr_prec_t prec) {
  return zeta_via_differences(s, N_max, prec);
}

std::vector<BigReal> partial_sum_errors(const ZetaReport& report) {
  std::vector<BigReal> errors;
  errors.reserve(report.partial_sums.size());
  for (const BigComplex& t : report.partial_sums) {
    errors.push_back(abs(t - report.reference));
  }
  return errors;
}

}  // namespace egfkit
