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

#include "egfkit/seq.hpp"

namespace egfkit {

/// Exact zeta value at a nonpositive integer: zeta(-n) = (-1)^n B_{n+1}/(n+1).
/// In particular zeta(0) = -1/2 and zeta(-2k) = 0 for k >= 1.
Rational zeta_neg(std::size_t n);

/// Exact Hurwitz value zeta(-n, a) = -B_{n+1}(a)/(n+1) for 0 < a <= 1.
/// Throws std::domain_error("a out of Hurwitz domain") otherwise.
Rational hurwitz_neg(std::size_t n, const Rational& a);

/// Both sides of an identity, for exact comparison by the caller.
struct CheckPair {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// (-1)^{m+1}/(m+1) vs sum_{i=1}^m (-1)^i C(m,i) zeta(i-m), m >= 1.
CheckPair theorem21_check(std::size_t m);

/// delta-form of the same identity, defined for all m >= 0; vacuously 0 = 0
/// at m = 0 and identical to theorem21_check for m >= 1.
CheckPair theorem21_delta_check(std::size_t m);

/// (-1)^{m+1}/(m+1) vs sum_{v=1}^m (-1)^v C(m,v) zeta(v-m, a) - (a-1)^m,
/// m >= 1, 0 < a <= 1.
CheckPair theorem23_check(std::size_t m, const Rational& a);

/// (zeta(0), zeta(-1), ..., zeta(1-K)).
EgfSeq zeta_neg_vector(std::size_t K);

/// (zeta(0,a), zeta(-1,a), ..., zeta(1-K,a)).
EgfSeq hurwitz_neg_vector(std::size_t K, const Rational& a);

/// (0, -1, 0, ..., 0) of order K: the EGF coefficients of -z, the convolver
/// that turns the zeta vectors into Bernoulli data.
EgfSeq minus_z_seq(std::size_t K);

}  // namespace egfkit
