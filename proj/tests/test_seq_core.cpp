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
#include "egfkit/seq.hpp"
#include "test_support.hpp"

using egfkit::EgfSeq;
using egfkit::Rational;
using egfkit_test::rat;
using egfkit_test::seq_of;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(2, -4).den() == 2);
  CHECK(rat("-1/12").str() == "-1/12");
  CHECK(rat("7").str() == "7");
  CHECK(rat("14/2").str() == "7");
  CHECK_THROWS_AS(rat("1/0"), std::domain_error);
  CHECK_THROWS_AS(rat("one half"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(egfkit::pow(rat("-2/3"), 3) == rat("-8/27"));
  CHECK(egfkit::pow(Rational(0), 0) == Rational(1));
}

TEST_CASE("make_seq and identity") {
  const EgfSeq id3 = seq_of({"1", "0", "0"});
  CHECK(egfkit::identity(3) == id3);
  CHECK(egfkit::identity(1) == seq_of({"1"}));
  CHECK(egfkit::make_seq({Rational(1), Rational(1), Rational(1), Rational(1)}) ==
        egfkit::geometric(Rational(1), 4));
  CHECK_THROWS_AS(egfkit::make_seq({}), std::invalid_argument);
  CHECK_THROWS_AS(egfkit::identity(0), std::invalid_argument);
}

TEST_CASE("add and scale are componentwise") {
  CHECK(egfkit::add(seq_of({"1", "2"}), seq_of({"3", "4"})) == seq_of({"4", "6"}));
  const EgfSeq a = seq_of({"1", "-1", "1"});
  CHECK(egfkit::scale(Rational(0), a) == seq_of({"0", "0", "0"}));
  CHECK(egfkit::scale(Rational(-1), a) == seq_of({"-1", "1", "-1"}));
  // orders truncate to the shorter input
  CHECK(egfkit::add(seq_of({"1", "2", "3"}), seq_of({"1", "1"})).order() == 2);
}

TEST_CASE("star convolution basics") {
  CHECK(egfkit::star(seq_of({"1", "1", "1"}), seq_of({"1", "1", "1"})) ==
        seq_of({"1", "2", "4"}));
  const EgfSeq a = seq_of({"3", "-1/2", "7", "2/3", "5"});
  CHECK(egfkit::star(egfkit::identity(4), a) == egfkit::take(a, 4));
  CHECK(egfkit::star(egfkit::bernoulli_numbers(5), egfkit::H_seq(5)) == egfkit::identity(5));
}

TEST_CASE("hadamard product basics") {
  const EgfSeq b = seq_of({"4", "-5/3", "6"});
  CHECK(egfkit::hadamard(egfkit::geometric(Rational(1), 3), b) == b);
  const Rational j(3, 2);
  CHECK(egfkit::hadamard(egfkit::geometric(j, 5), egfkit::geometric(Rational(1) / j, 5)) ==
        egfkit::geometric(Rational(1), 5));
  CHECK(egfkit::hadamard(seq_of({"1", "-1", "1"}), seq_of({"1", "2", "4"})) ==
        seq_of({"1", "-2", "4"}));
}

TEST_CASE("geometric vectors") {
  CHECK(egfkit::geometric(Rational(1), 4) == seq_of({"1", "1", "1", "1"}));
  CHECK(egfkit::geometric(Rational(-1), 4) == seq_of({"1", "-1", "1", "-1"}));
  CHECK(egfkit::geometric(Rational(0), 3) == egfkit::identity(3));  // 0^0 = 1
  CHECK(egfkit::star(egfkit::geometric(Rational(2), 3), egfkit::geometric(Rational(-2), 3)) ==
        egfkit::identity(3));
}

TEST_CASE("star inverse") {
  CHECK(egfkit::inverse(egfkit::identity(6)) == egfkit::identity(6));
  CHECK(egfkit::inverse(egfkit::H_seq(5)) == seq_of({"1", "-1/2", "1/6", "0", "-1/30"}));
  const Rational j(-5, 7);
  CHECK(egfkit::inverse(egfkit::geometric(j, 8)) == egfkit::geometric(-j, 8));
  CHECK_THROWS_AS(egfkit::inverse(seq_of({"0", "1"})), std::domain_error);

  egfkit_test::RandomRationals rng(2026);
  for (int it = 0; it < 20; ++it) {
    EgfSeq a = rng.next_seq(1, 12);
    if (a[0].is_zero()) {
      continue;
    }
    CHECK(egfkit::star(a, egfkit::inverse(a)) == egfkit::identity(a.order()));
  }
}

TEST_CASE("shift operators") {
  CHECK(egfkit::shift_left(seq_of({"0", "1", "2", "3"})) == seq_of({"1", "2", "3"}));
  CHECK(egfkit::shift_right(seq_of({"1", "2"})) == seq_of({"0", "1", "2"}));
  CHECK(egfkit::shift_right(seq_of({"0", "0"})) == seq_of({"0", "0", "0"}));
  CHECK_THROWS_AS(egfkit::shift_left(seq_of({"5"})), std::invalid_argument);

  const EgfSeq a = seq_of({"2", "-3", "5/2"});
  CHECK(egfkit::shift_left(egfkit::shift_right(a)) == a);
  CHECK(egfkit::shift_right(a)[0].is_zero());

  // differentiating e^{jz} scales by j
  const Rational j(4, 3);
  CHECK(egfkit::shift_left(egfkit::geometric(j, 6)) ==
        egfkit::scale(j, egfkit::geometric(j, 5)));
}

TEST_CASE("ring laws on random sequences") {
  egfkit_test::RandomRationals rng(7);
  for (int it = 0; it < 30; ++it) {
    const EgfSeq a = rng.next_seq(1, 16);
    const EgfSeq b = rng.next_seq(1, 16);
    const EgfSeq c = rng.next_seq(1, 16);
    const Rational lambda = rng.next();
    CHECK(egfkit::star(a, b) == egfkit::star(b, a));
    CHECK(egfkit::star(egfkit::star(a, b), c) == egfkit::star(a, egfkit::star(b, c)));
    CHECK(egfkit::star(a, egfkit::add(b, c)) ==
          egfkit::add(egfkit::star(a, b), egfkit::star(a, c)));
    CHECK(egfkit::star(a, egfkit::scale(lambda, b)) ==
          egfkit::scale(lambda, egfkit::star(a, b)));
  }
}

TEST_CASE("hadamard-geometric interplay") {
  egfkit_test::RandomRationals rng(11);
  for (int it = 0; it < 30; ++it) {
    const EgfSeq a = rng.next_seq(1, 12);
    const EgfSeq b = rng.next_seq(1, 12);
    const std::size_t K = std::min(a.order(), b.order());
    const Rational j = rng.next_nonzero();
    const EgfSeq gj = egfkit::geometric(j, K);
    const EgfSeq gm1 = egfkit::geometric(Rational(-1), K);
    CHECK(egfkit::hadamard(gj, egfkit::star(a, b)) ==
          egfkit::star(egfkit::hadamard(gj, a), egfkit::hadamard(gj, b)));
    CHECK(egfkit::star(egfkit::hadamard(gm1, a), b) ==
          egfkit::hadamard(gm1, egfkit::star(a, egfkit::hadamard(gm1, b))));
  }

  // signed Bernoulli and harmonic vectors stay inverse to each other
  const std::size_t K = 30;
  const EgfSeq gm1 = egfkit::geometric(Rational(-1), K);
  CHECK(egfkit::star(egfkit::hadamard(gm1, egfkit::bernoulli_numbers(K)),
                     egfkit::hadamard(gm1, egfkit::H_seq(K))) == egfkit::identity(K));
}
