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

#include "egfkit/bernoulli.hpp"
#include "egfkit/binomial.hpp"
#include "egfkit/poly.hpp"
#include "test_support.hpp"

using egfkit::EgfSeq;
using egfkit::Poly;
using egfkit::Rational;
using egfkit_test::rat;
using egfkit_test::seq_of;

TEST_CASE("harmonic vector") {
  CHECK(egfkit::H_seq(3) == seq_of({"1", "1/2", "1/3"}));
  CHECK(egfkit::H_seq(1) == seq_of({"1"}));
  CHECK(egfkit::star(egfkit::bernoulli_numbers(12), egfkit::H_seq(12)) == egfkit::identity(12));
}

TEST_CASE("bernoulli numbers by recursion") {
  const EgfSeq B = egfkit::bernoulli_numbers(13);
  CHECK(egfkit::take(B, 5) == seq_of({"1", "-1/2", "1/6", "0", "-1/30"}));
  CHECK(B[6] == rat("1/42"));
  CHECK(B[8] == rat("-1/30"));
  CHECK(B[10] == rat("5/66"));
  CHECK(B[12] == rat("-691/2730"));
  CHECK(egfkit::bernoulli_number(1) == rat("-1/2"));

  for (std::size_t k = 1; 2 * k + 1 < 13; ++k) {
    CHECK(B[2 * k + 1].is_zero());
  }
}

TEST_CASE("dual-route bernoulli at order 60") {
  CHECK(egfkit::bernoulli_numbers(60) == egfkit::inverse(egfkit::H_seq(60)));
}

TEST_CASE("alternating-sign symmetry of bernoulli sums") {
  // sum_k C(n,k) B_k = (-1)^n B_n
  const EgfSeq B = egfkit::bernoulli_numbers(51);
  for (std::size_t n = 0; n <= 50; ++n) {
    const std::vector<mpz_class> row = egfkit::binomial_row(n);
    Rational sum;
    for (std::size_t k = 0; k <= n; ++k) {
      sum += Rational(row[k]) * B[k];
    }
    CHECK(sum == ((n % 2 == 0) ? B[n] : -B[n]));
  }
}

TEST_CASE("bernoulli polynomials") {
  CHECK(egfkit::bernoulli_poly(0) == Poly::constant(Rational(1)));
  CHECK(egfkit::bernoulli_poly(1) == Poly({rat("-1/2"), rat("1")}));
  CHECK(egfkit::bernoulli_poly(2) == Poly({rat("1/6"), rat("-1"), rat("1")}));
  for (std::size_t n = 0; n <= 12; ++n) {
    const Poly p = egfkit::bernoulli_poly(n);
    CHECK(p.degree() == n);
    CHECK(p.coeff(n) == Rational(1));                          // monic
    CHECK(p.eval(Rational(0)) == egfkit::bernoulli_number(n));  // B_n(0) = B_n
  }
}

TEST_CASE("bernoulli polynomial sequence at a point") {
  const std::size_t K = 10;
  CHECK(egfkit::bernoulli_poly_seq(Rational(0), K) == egfkit::bernoulli_numbers(K));
  CHECK(egfkit::bernoulli_poly_seq(Rational(1), K) ==
        egfkit::hadamard(egfkit::geometric(Rational(-1), K), egfkit::bernoulli_numbers(K)));
  CHECK(egfkit::bernoulli_poly_seq(rat("1/2"), 3)[2] == rat("-1/12"));

  // component n equals B_n evaluated at x
  const Rational x(3, 7);
  const EgfSeq s = egfkit::bernoulli_poly_seq(x, K);
  for (std::size_t n = 0; n < K; ++n) {
    CHECK(s[n] == egfkit::bernoulli_poly(n).eval(x));
  }
}

TEST_CASE("faulhaber closed form") {
  CHECK(egfkit::faulhaber_sum(1, 100) == Rational(5050));
  CHECK(egfkit::faulhaber_sum(2, 3) == Rational(14));
  CHECK(egfkit::faulhaber_sum(0, 5) == Rational(5));
  CHECK(egfkit::faulhaber_sum(3, 4) == Rational(100));
  CHECK(egfkit::faulhaber_sum(10, 50) == egfkit::power_sum_bruteforce(10, 50));

  for (unsigned long n = 0; n <= 6; ++n) {
    for (unsigned long m = 1; m <= 30; ++m) {
      CHECK(egfkit::faulhaber_sum(n, m) == egfkit::power_sum_bruteforce(n, m));
    }
  }
}

TEST_CASE("power sum brute force") {
  CHECK(egfkit::power_sum_bruteforce(0, 5) == Rational(5));
  CHECK(egfkit::power_sum_bruteforce(2, 3) == Rational(14));
  CHECK(egfkit::power_sum_bruteforce(3, 4) == Rational(100));
  CHECK(egfkit::power_sum_bruteforce(4, 0) == Rational(0));
}

TEST_CASE("faulhaber via bernoulli polynomial difference") {
  // s_n(m) = (B_{n+1}(m+1) - B_{n+1}(1)) / (n+1)
  for (unsigned long n = 0; n <= 8; ++n) {
    const Poly Bp = egfkit::bernoulli_poly(n + 1);
    const Rational at_one = Bp.eval(Rational(1));
    for (unsigned long m = 1; m <= 20; ++m) {
      const Rational rhs =
          (Bp.eval(Rational(static_cast<long>(m) + 1)) - at_one) / Rational(static_cast<long>(n) + 1);
      CHECK(egfkit::faulhaber_sum(n, m) == rhs);
    }
  }
}

TEST_CASE("power-sum generating identity") {
  // (0, s_0(m), 2 s_1(m), 3 s_2(m), ...) = B(m+1) - B(1)
  const std::size_t order = 10;
  for (unsigned long m = 1; m <= 5; ++m) {
    std::vector<Rational> lhs(order, Rational(0));
    for (std::size_t n = 1; n < order; ++n) {
      lhs[n] = Rational(static_cast<long>(n)) * egfkit::faulhaber_sum(n - 1, m);
    }
    CHECK(EgfSeq(std::move(lhs)) ==
          egfkit::sub(egfkit::bernoulli_poly_seq(Rational(static_cast<long>(m) + 1), order),
                      egfkit::bernoulli_poly_seq(Rational(1), order)));
  }
}

TEST_CASE("monomial power-sum polynomial") {
  CHECK(egfkit::s_poly(0) == Poly({rat("-1"), rat("1")}));           // x - 1
  CHECK(egfkit::s_poly(1) == Poly({rat("0"), rat("-1/2"), rat("1/2")}));  // x^2/2 - x/2
  CHECK(egfkit::s_poly(2).eval(Rational(4)) == Rational(14));

  // S_n(m) = sum_{j<m} j^n, and S_n = (B_{n+1}(x) - B_{n+1}(1))/(n+1)
  for (std::size_t n = 0; n <= 8; ++n) {
    const Poly S = egfkit::s_poly(n);
    CHECK(S.degree() == n + 1);
    for (unsigned long m = 1; m <= 12; ++m) {
      CHECK(S.eval(Rational(static_cast<long>(m))) ==
            egfkit::power_sum_bruteforce(n, m - 1));
    }
    const Poly Bp = egfkit::bernoulli_poly(n + 1);
    const Poly alt = Rational(1, static_cast<long>(n) + 1) *
                     (Bp - Poly::constant(Bp.eval(Rational(1))));
    CHECK(S == alt);
  }
}
