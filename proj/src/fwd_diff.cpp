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

#include "egfkit/fwd_diff.hpp"

#include <algorithm>

#include "egfkit/binomial.hpp"

namespace egfkit {

namespace {

void check_length(std::size_t n, std::size_t length) {
  if (n >= length) {
    throw std::invalid_argument("table too short");
  }
}

}  // namespace

Rational forward_diff(const ValueTable<Rational>& f, std::size_t n) {
  check_length(n, f.values.size());
  const std::vector<mpz_class> row = binomial_row(n);
  Rational sum;
  for (std::size_t i = 0; i <= n; ++i) {
    Rational term = Rational(row[i]) * f.values[i];
    sum += ((n - i) % 2 == 0) ? term : -term;
  }
  return sum;
}

BigReal forward_diff(const ValueTable<BigReal>& f, std::size_t n, mpfr_prec_t target_prec) {
  check_length(n, f.values.size());
  mpfr_prec_t target = target_prec;
  if (target == 0) {
    for (const BigReal& v : f.values) {
      target = std::max(target, v.precision());
    }
  }
  const mpfr_prec_t wp = target + std::max<mpfr_prec_t>(32, static_cast<mpfr_prec_t>(n));
  const std::vector<mpz_class> row = binomial_row(n);
  BigReal sum(wp);
  for (std::size_t i = 0; i <= n; ++i) {
    const BigReal term = BigReal(row[i], wp) * f.values[i].round_to(wp);
    sum = ((n - i) % 2 == 0) ? sum + term : sum - term;
  }
  return sum.round_to(target);
}

BigComplex forward_diff(const ValueTable<BigComplex>& f, std::size_t n, mpfr_prec_t target_prec) {
  check_length(n, f.values.size());
  mpfr_prec_t target = target_prec;
  if (target == 0) {
    for (const BigComplex& v : f.values) {
      target = std::max(target, v.precision());
    }
  }
  const mpfr_prec_t wp = target + std::max<mpfr_prec_t>(32, static_cast<mpfr_prec_t>(n));
  const std::vector<mpz_class> row = binomial_row(n);
  BigComplex sum(wp);
  for (std::size_t i = 0; i <= n; ++i) {
    BigComplex term = f.values[i].round_to(wp) * BigReal(row[i], wp);
    if ((n - i) % 2 != 0) {
      term = -term;
    }
    sum += term;
  }
  return sum.round_to(target);
}

EgfSeq diff_seq_via_star(const ValueTable<Rational>& f) {
  const EgfSeq table = make_seq(f.values);
  return star(table, geometric(Rational(-1), table.order()));
}

}  // namespace egfkit
