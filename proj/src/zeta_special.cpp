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

#include "egfkit/zeta_special.hpp"

#include <stdexcept>
#include <vector>

#include "egfkit/bernoulli.hpp"
#include "egfkit/binomial.hpp"

namespace egfkit {

Rational zeta_neg(std::size_t n) {
  Rational v = bernoulli_number(n + 1) / Rational(static_cast<long>(n) + 1);
  return (n % 2 == 0) ? v : -v;
}

Rational hurwitz_neg(std::size_t n, const Rational& a) {
  if (a.sign() <= 0 || a > Rational(1)) {
    throw std::domain_error("a out of Hurwitz domain");
  }
  return -(bernoulli_poly(n + 1).eval(a)) / Rational(static_cast<long>(n) + 1);
}

CheckPair theorem21_check(std::size_t m) {
  if (m == 0) {
    throw std::invalid_argument("m must be positive");
  }
  Rational lhs = Rational(1, static_cast<long>(m) + 1);
  if (m % 2 == 0) {
    lhs = -lhs;
  }
  const std::vector<mpz_class> row = binomial_row(m);
  Rational rhs;
  for (std::size_t i = 1; i <= m; ++i) {
    Rational term = Rational(row[i]) * zeta_neg(m - i);
    rhs += (i % 2 == 1) ? -term : term;
  }
  return {lhs, rhs};
}

CheckPair theorem21_delta_check(std::size_t m) {
  // delta_{m,0} - (-1)^m/(m+1) on the left; the sum collapses to the
  // theorem21 right side for m >= 1 and to 0 at m = 0.
  Rational lhs = Rational(1, static_cast<long>(m) + 1);
  if (m % 2 == 0) {
    lhs = -lhs;
  }
  if (m == 0) {
    lhs += Rational(1);
    return {lhs, Rational(0)};
  }
  return {lhs, theorem21_check(m).rhs};
}

CheckPair theorem23_check(std::size_t m, const Rational& a) {
  if (m == 0) {
    throw std::invalid_argument("m must be positive");
  }
  Rational lhs = Rational(1, static_cast<long>(m) + 1);
  if (m % 2 == 0) {
    lhs = -lhs;
  }
  const std::vector<mpz_class> row = binomial_row(m);
  Rational rhs;
  for (std::size_t v = 1; v <= m; ++v) {
    Rational term = Rational(row[v]) * hurwitz_neg(m - v, a);
    rhs += (v % 2 == 1) ? -term : term;
  }
  rhs -= pow(a - Rational(1), static_cast<unsigned long>(m));
  return {lhs, rhs};
}

EgfSeq zeta_neg_vector(std::size_t K) {
  if (K == 0) {
    throw std::invalid_argument("order must be positive");
  }
  const EgfSeq B = bernoulli_numbers(K + 1);
  std::vector<Rational> c;
  c.reserve(K);
  for (std::size_t n = 0; n < K; ++n) {
    Rational v = B[n + 1] / Rational(static_cast<long>(n) + 1);
    c.push_back(n % 2 == 0 ? v : -v);
  }
  return EgfSeq(std::move(c));
}

EgfSeq hurwitz_neg_vector(std::size_t K, const Rational& a) {
  if (K == 0) {
    throw std::invalid_argument("order must be positive");
  }
  std::vector<Rational> c;
  c.reserve(K);
  for (std::size_t n = 0; n < K; ++n) {
    c.push_back(hurwitz_neg(n, a));
  }
  return EgfSeq(std::move(c));
}

EgfSeq minus_z_seq(std::size_t K) {
  if (K == 0) {
    throw std::invalid_argument("order must be positive");
  }
  std::vector<Rational> c(K, Rational(0));
  if (K >= 2) {
    c[1] = Rational(-1);
  }
  return EgfSeq(std::move(c));
}

}  // namespace egfkit
