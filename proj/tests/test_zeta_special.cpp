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

#include "egfkit/bernoulli.hpp"
#include "egfkit/zeta_special.hpp"
#include "test_support.hpp"

using egfkit::EgfSeq;
using egfkit::Rational;
using egfkit_test::rat;
using egfkit_test::seq_of;

TEST_CASE("exact zeta values at nonpositive integers") {
  CHECK(egfkit::zeta_neg(0) == rat("-1/2"));
  CHECK(egfkit::zeta_neg(1) == rat("-1/12"));
  CHECK(egfkit::zeta_neg(2) == Rational(0));
  CHECK(egfkit::zeta_neg(3) == rat("1/120"));
  CHECK(egfkit::zeta_neg(4) == Rational(0));
  CHECK(egfkit::zeta_neg(5) == rat("-1/252"));
  CHECK(egfkit::zeta_neg(7) == rat("1/240"));

  for (std::size_t k = 1; k <= 14; ++k) {
    CHECK(egfkit::zeta_neg(2 * k).is_zero());
  }
}

TEST_CASE("exact hurwitz values") {
  CHECK(egfkit::hurwitz_neg(0, rat("1/2")) == Rational(0));
  CHECK(egfkit::hurwitz_neg(0, Rational(1)) == rat("-1/2"));
  CHECK(egfkit::hurwitz_neg(1, Rational(1)) == rat("-1/12"));
  // zeta(0, a) = 1/2 - a
  for (const char* a : {"1/4", "1/3", "1/2", "2/3", "1"}) {
    CHECK(egfkit::hurwitz_neg(0, rat(a)) == rat("1/2") - rat(a));
  }
  for (std::size_t n = 0; n <= 30; ++n) {
    CHECK(egfkit::hurwitz_neg(n, Rational(1)) == egfkit::zeta_neg(n));
  }
  CHECK_THROWS_AS(egfkit::hurwitz_neg(1, Rational(0)), std::domain_error);
  CHECK_THROWS_AS(egfkit::hurwitz_neg(1, Rational(2)), std::domain_error);
  CHECK_THROWS_AS(egfkit::hurwitz_neg(1, rat("-1/3")), std::domain_error);
}

TEST_CASE("alternating binomial zeta identity") {
  const auto m1 = egfkit::theorem21_check(1);
  CHECK(m1.lhs == rat("1/2"));
  CHECK(m1.rhs == rat("1/2"));
  const auto m2 = egfkit::theorem21_check(2);
  CHECK(m2.lhs == rat("-1/3"));
  CHECK(m2.rhs == rat("-1/3"));
  CHECK(egfkit::theorem21_check(3).lhs == rat("1/4"));

  for (std::size_t m = 1; m <= 30; ++m) {
    CHECK(egfkit::theorem21_check(m).holds());
  }
  CHECK_THROWS_AS(egfkit::theorem21_check(0), std::invalid_argument);
}

TEST_CASE("delta form covers m = 0") {
  const auto at_zero = egfkit::theorem21_delta_check(0);
  CHECK(at_zero.lhs == Rational(0));
  CHECK(at_zero.rhs == Rational(0));
  for (std::size_t m = 0; m <= 30; ++m) {
    CHECK(egfkit::theorem21_delta_check(m).holds());
  }
}

TEST_CASE("hurwitz variant of the identity") {
  const auto one = egfkit::theorem23_check(1, Rational(1));
  CHECK(one.lhs == rat("1/2"));
  CHECK(one.rhs == rat("1/2"));
  const auto half = egfkit::theorem23_check(1, rat("1/2"));
  CHECK(half.lhs == rat("1/2"));
  CHECK(half.rhs == rat("1/2"));  // -zeta(0,1/2) - (-1/2) = 0 + 1/2
  CHECK(egfkit::theorem23_check(2, rat("1/2")).lhs == rat("-1/3"));
  CHECK(egfkit::theorem23_check(2, rat("1/2")).holds());

  for (std::size_t m = 1; m <= 20; ++m) {
    for (const char* a : {"1", "1/2", "1/3", "2/3", "1/4"}) {
      CHECK(egfkit::theorem23_check(m, rat(a)).holds());
    }
  }
}

TEST_CASE("zeta vector") {
  CHECK(egfkit::zeta_neg_vector(3) == seq_of({"-1/2", "-1/12", "0"}));
}

TEST_CASE("vector identities at order 20") {
  const std::size_t K = 20;
  const EgfSeq id = egfkit::identity(K);
  const EgfSeq gm1 = egfkit::geometric(Rational(-1), K);
  const EgfSeq mH = egfkit::hadamard(gm1, egfkit::H_seq(K));
  const EgfSeq mB = egfkit::hadamard(gm1, egfkit::bernoulli_numbers(K));
  const EgfSeq w = egfkit::minus_z_seq(K);
  const EgfSeq Z = egfkit::zeta_neg_vector(K);

  CHECK(egfkit::sub(id, mH) == egfkit::star(mH, egfkit::star(w, Z)));
  CHECK(egfkit::sub(mB, id) == egfkit::star(id, egfkit::star(w, Z)));
  for (const char* a : {"1/2", "1/3"}) {
    CHECK(egfkit::sub(egfkit::bernoulli_poly_seq(rat(a), K), id) ==
          egfkit::star(w, egfkit::hurwitz_neg_vector(K, rat(a))));
  }
}

TEST_CASE("scalar identity behind the vector form") {
  // (-1)^n B_n - delta_{0,n} = -n zeta(1-n)
  const EgfSeq B = egfkit::bernoulli_numbers(31);
  for (std::size_t n = 1; n <= 30; ++n) {
    const Rational lhs = (n % 2 == 0) ? B[n] : -B[n];
    const Rational rhs = Rational(-static_cast<long>(n)) * egfkit::zeta_neg(n - 1);
    CHECK(lhs == rhs);
  }
}
