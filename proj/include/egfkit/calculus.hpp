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

#include "egfkit/poly.hpp"
#include "egfkit/rational.hpp"

namespace egfkit {

/// Polynomial in the shifted factorial-normalized basis around 1:
/// coeffs[k] multiplies (x-1)^k / k!. Integration and differentiation are
/// index shifts in this basis, so the power-sum polynomials take a closed
/// Bernoulli-coefficient form.
class ShiftedSeq {
 public:
  explicit ShiftedSeq(std::vector<Rational> coeffs);

  std::size_t order() const { return c_.size(); }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  std::string str() const;

  friend bool operator==(const ShiftedSeq& a, const ShiftedSeq& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ShiftedSeq& a, const ShiftedSeq& b) { return !(a == b); }

 private:
  std::vector<Rational> c_;
};

/// S_n in the shifted basis: entry n+1-k holds (n!/k!) (-1)^k B_k for
/// k = 0..n, entry 0 is 0. S_n(m) = sum_{j=1}^{m-1} j^n for integers m >= 1.
ShiftedSeq s_poly_shifted(std::size_t n);

/// Antiderivative as a one-step right shift in the shifted basis; the
/// integration constant is fixed by vanishing at x = 1.
ShiftedSeq integrate_shifted(const ShiftedSeq& a);

/// Derivative: the inverse left shift. Requires order >= 2.
ShiftedSeq differentiate_shifted(const ShiftedSeq& a);

/// Exact integral over [0,1] of the represented polynomial, evaluated
/// per basis element from int_0^1 (x-1)^k/k! dx = (-1)^k/(k+1)!.
Rational definite_integral_01(const ShiftedSeq& a);

/// Expansion into the monomial basis.
Poly to_poly(const ShiftedSeq& a);

/// Taylor coefficients around 1: the inverse of to_poly.
ShiftedSeq from_poly(const Poly& p);

}  // namespace egfkit
