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
#include <string>
#include <vector>

#include "egfkit/rational.hpp"

namespace egfkit {

/// Truncated coefficient vector (a_0, ..., a_{K-1}) of an exponential
/// generating function sum a_n z^n/n!.
///
/// Sequences are immutable once built. Binary operations truncate to the
/// shorter order; this is exact, since entry n of every operation here
/// depends only on entries <= n of the inputs.
class EgfSeq {
 public:
  /// Throws std::invalid_argument("empty sequence") on an empty list.
  explicit EgfSeq(std::vector<Rational> coeffs);

  std::size_t order() const { return c_.size(); }
  const Rational& operator[](std::size_t n) const { return c_[n]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  std::string str() const;  // "(1, -1/2, 1/6)"

  friend bool operator==(const EgfSeq& a, const EgfSeq& b) { return a.c_ == b.c_; }
  friend bool operator!=(const EgfSeq& a, const EgfSeq& b) { return !(a == b); }

 private:
  std::vector<Rational> c_;
};

EgfSeq make_seq(std::vector<Rational> coeffs);

EgfSeq add(const EgfSeq& a, const EgfSeq& b);
EgfSeq sub(const EgfSeq& a, const EgfSeq& b);
EgfSeq scale(const Rational& lambda, const EgfSeq& a);

/// Binomial convolution: result_n = sum_{k=0}^n C(n,k) a_k b_{n-k}.
/// Multiplies the underlying functions.
EgfSeq star(const EgfSeq& a, const EgfSeq& b);

/// Componentwise product.
EgfSeq hadamard(const EgfSeq& a, const EgfSeq& b);

/// (1, 0, ..., 0): the star-identity. Throws std::invalid_argument for K = 0.
EgfSeq identity(std::size_t K);

/// (j^0, j^1, ..., j^{K-1}): coefficients of e^{jz}. geometric(0, K) is the
/// star-identity (0^0 = 1 here).
EgfSeq geometric(const Rational& j, std::size_t K);

/// Star-inverse. Requires a_0 != 0; throws std::domain_error
/// ("not invertible: zero leading coefficient") otherwise.
///
/// b_0 = 1/a_0, b_n = -(1/a_0) * sum_{k=1}^n C(n,k) a_k b_{n-k}.
EgfSeq inverse(const EgfSeq& a);

/// Derivative: (a_1, ..., a_{K-1}), order K-1. Requires order >= 2.
EgfSeq shift_left(const EgfSeq& a);

/// Integral from 0: (0, a_0, ..., a_{K-1}), order K+1.
EgfSeq shift_right(const EgfSeq& a);

/// Prefix truncation to order K (K <= order).
EgfSeq take(const EgfSeq& a, std::size_t K);

}  // namespace egfkit
