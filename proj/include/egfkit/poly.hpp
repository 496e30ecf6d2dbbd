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

/// Univariate polynomial with exact rational coefficients, monomial basis.
/// Trailing zero coefficients are trimmed; the zero polynomial has degree 0.
class Poly {
 public:
  Poly() : c_{Rational(0)} {}
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& coeff, std::size_t power);

  std::size_t degree() const { return c_.size() - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }

  /// Coefficient of x^k; zero beyond the degree.
  const Rational& coeff(std::size_t k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;

  std::string str(const std::string& var = "x") const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend Poly operator-(const Poly& a);

 private:
  std::vector<Rational> c_;  // c_[k] = coefficient of x^k, trailing zeros trimmed
};

/// p(shift + scale * x), expanded exactly.
Poly compose_affine(const Poly& p, const Rational& shift, const Rational& scale);

/// q with q(x) = p(x + c).
Poly taylor_shift(const Poly& p, const Rational& c);

}  // namespace egfkit
