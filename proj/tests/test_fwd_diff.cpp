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

#include "egfkit/fwd_diff.hpp"
#include "test_support.hpp"

using egfkit::BigReal;
using egfkit::Rational;
using egfkit::ValueTable;
using egfkit_test::rat;

namespace {

ValueTable<Rational> table_of(std::initializer_list<const char*> entries) {
  ValueTable<Rational> t;
  for (const char* e : entries) {
    t.values.push_back(rat(e));
  }
  return t;
}

}  // namespace

TEST_CASE("forward differences of standard tables") {
  const auto constant = table_of({"7", "7", "7", "7"});
  CHECK(egfkit::forward_diff(constant, 0) == Rational(7));
  for (std::size_t n = 1; n < 4; ++n) {
    CHECK(egfkit::forward_diff(constant, n).is_zero());
  }

  const auto powers_of_two = table_of({"1", "2", "4", "8", "16"});
  for (std::size_t n = 0; n < 5; ++n) {
    CHECK(egfkit::forward_diff(powers_of_two, n) == Rational(1));
  }

  const auto squares = table_of({"0", "1", "4", "9"});
  CHECK(egfkit::forward_diff(squares, 2) == Rational(2));
  CHECK_THROWS_AS(egfkit::forward_diff(squares, 4), std::invalid_argument);
}

TEST_CASE("recursive difference table") {
  CHECK(egfkit::diff_table_recursive(table_of({"5"})).values == table_of({"5"}).values);
  CHECK(egfkit::diff_table_recursive(table_of({"1", "2", "4"})).values ==
        table_of({"1", "1", "1"}).values);
}

TEST_CASE("difference sequence via convolution") {
  const auto ones = table_of({"1", "1", "1", "1"});
  CHECK(egfkit::diff_seq_via_star(ones) == egfkit::identity(4));

  ValueTable<Rational> geo2;
  Rational p(1);
  for (int i = 0; i < 6; ++i) {
    geo2.values.push_back(p);
    p *= Rational(2);
  }
  CHECK(egfkit::diff_seq_via_star(geo2) == egfkit::geometric(Rational(1), 6));
}

TEST_CASE("triple-route agreement on random tables") {
  egfkit_test::RandomRationals rng(31);
  for (int it = 0; it < 30; ++it) {
    ValueTable<Rational> f;
    const std::size_t len = 1 + static_cast<std::size_t>(it % 20);
    for (std::size_t i = 0; i < len; ++i) {
      f.values.push_back(rng.next());
    }
    const auto recursive = egfkit::diff_table_recursive(f);
    const auto via_star = egfkit::diff_seq_via_star(f);
    for (std::size_t n = 0; n < len; ++n) {
      const Rational direct = egfkit::forward_diff(f, n);
      CHECK(direct == recursive.values[n]);
      CHECK(direct == via_star[n]);
    }
  }
}

TEST_CASE("big-float forward differences track the exact path") {
  const mpfr_prec_t prec = 192;
  ValueTable<Rational> exact;
  ValueTable<BigReal> big;
  for (long i = 0; i < 16; ++i) {
    const Rational v(1, (i + 1) * (i + 1));  // f(i) = (1+i)^{-2}
    exact.values.push_back(v);
    big.values.emplace_back(v, prec);
  }
  const BigReal tol = BigReal::pow2(-160, prec);
  for (std::size_t n = 0; n < 16; ++n) {
    const BigReal want(egfkit::forward_diff(exact, n), prec);
    const BigReal got = egfkit::forward_diff(big, n, prec);
    CHECK(abs(got - want) < tol);
  }
}

TEST_CASE("big-complex forward differences") {
  const mpfr_prec_t prec = 128;
  ValueTable<egfkit::BigComplex> f;
  ValueTable<Rational> re;
  ValueTable<Rational> im;
  egfkit_test::RandomRationals rng(53);
  for (int i = 0; i < 10; ++i) {
    const Rational a = rng.next();
    const Rational b = rng.next();
    re.values.push_back(a);
    im.values.push_back(b);
    f.values.emplace_back(BigReal(a, prec), BigReal(b, prec));
  }
  const BigReal tol = BigReal::pow2(-100, prec);
  for (std::size_t n = 0; n < 10; ++n) {
    const auto got = egfkit::forward_diff(f, n, prec);
    CHECK(abs(got.real() - BigReal(egfkit::forward_diff(re, n), prec)) < tol);
    CHECK(abs(got.imag() - BigReal(egfkit::forward_diff(im, n), prec)) < tol);
  }
}
