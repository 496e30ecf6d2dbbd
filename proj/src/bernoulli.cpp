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

#include "egfkit/bernoulli.hpp"

#include <stdexcept>
#include <vector>

#include "egfkit/binomial.hpp"

namespace egfkit {

EgfSeq H_seq(std::size_t K) {
  if (K == 0) {
    throw std::invalid_argument("order must be positive");
  }
  std::vector<Rational> c;
  c.reserve(K);
  for (std::size_t n = 0; n < K; ++n) {
    c.emplace_back(1, static_cast<long>(n) + 1);
  }
  return EgfSeq(std::move(c));
}

EgfSeq bernoulli_numbers(std::size_t K) {
  if (K == 0) {
    throw std::invalid_argument("order must be positive");
  }
  std::vector<Rational> B;
  B.reserve(K);
  B.push_back(Rational(1));
  // row holds C(n+1, .) while computing B_n
  std::vector<mpz_class> row{1_mpz};
  next_binomial_row(row);
  for (std::size_t n = 1; n < K; ++n) {
    next_binomial_row(row);
    Rational sum;
    for (std::size_t k = 0; k < n; ++k) {
      sum += Rational(row[k]) * B[k];
    }
    B.push_back(-sum / Rational(static_cast<long>(n) + 1));
  }
  return EgfSeq(std::move(B));
}

Rational bernoulli_number(std::size_t n) {
  return bernoulli_numbers(n + 1)[n];
}

Poly bernoulli_poly(std::size_t n) {
  const EgfSeq B = bernoulli_numbers(n + 1);
  const std::vector<mpz_class> row = binomial_row(n);
  std::vector<Rational> c(n + 1, Rational(0));
  for (std::size_t k = 0; k <= n; ++k) {
    c[n - k] = Rational(row[k]) * B[k];
  }
  return Poly(std::move(c));
}

EgfSeq bernoulli_poly_seq(const Rational& x, std::size_t K) {
  return star(bernoulli_numbers(K), geometric(x, K));
}

Rational faulhaber_sum(unsigned long n, unsigned long m) {
  if (m == 0) {
    throw std::invalid_argument("m must be positive");
  }
  // sum_{j=1}^m j^n = (1/(n+1)) sum_{k=0}^n C(n+1,k) (-1)^k B_k m^{n-k+1}
  const EgfSeq B = bernoulli_numbers(n + 1);
  const std::vector<mpz_class> row = binomial_row(n + 1);
  const mpz_class mz(m);
  mpz_class mpow;  // m^{n-k+1}
  mpz_pow_ui(mpow.get_mpz_t(), mz.get_mpz_t(), n + 1);
  Rational sum;
  for (unsigned long k = 0; k <= n; ++k) {
    Rational term = Rational(row[k]) * B[k] * Rational(mpow);
    if (k % 2 == 1) {
      term = -term;
    }
    sum += term;
    mpz_divexact(mpow.get_mpz_t(), mpow.get_mpz_t(), mz.get_mpz_t());
  }
  return sum / Rational(static_cast<long>(n) + 1);
}

Rational power_sum_bruteforce(unsigned long n, unsigned long m) {
  mpz_class sum = 0;
  mpz_class jp;
  for (unsigned long j = 1; j <= m; ++j) {
    mpz_ui_pow_ui(jp.get_mpz_t(), j, n);
    sum += jp;
  }
  return Rational(sum);
}

Poly s_poly(std::size_t n) {
  const EgfSeq B = bernoulli_numbers(n + 1);
  const mpz_class n_fact = factorial(n);
  Poly result;
  for (std::size_t k = 0; k <= n; ++k) {
    // (n!/k!) (-1)^k B_k (x-1)^{n+1-k}/(n+1-k)!
    Rational coeff = Rational(n_fact) * B[k] /
                     (Rational(factorial(k)) * Rational(factorial(n + 1 - k)));
    if (k % 2 == 1) {
      coeff = -coeff;
    }
    Poly basis = Poly::constant(Rational(1));
    const Poly x_minus_1(std::vector<Rational>{Rational(-1), Rational(1)});
    for (std::size_t e = 0; e < n + 1 - k; ++e) {
      basis = basis * x_minus_1;
    }
    result = result + coeff * basis;
  }
  return result;
}

}  // namespace egfkit
