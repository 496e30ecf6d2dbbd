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

#include "egfkit/calculus.hpp"

#include <sstream>
#include <stdexcept>

#include "egfkit/bernoulli.hpp"
#include "egfkit/binomial.hpp"

namespace egfkit {

ShiftedSeq::ShiftedSeq(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) {
    throw std::invalid_argument("empty sequence");
  }
}

std::string ShiftedSeq::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k != 0) {
      os << ", ";
    }
    os << c_[k];
  }
  os << ")";
  return os.str();
}

ShiftedSeq s_poly_shifted(std::size_t n) {
  const EgfSeq B = bernoulli_numbers(n + 1);
  const mpz_class n_fact = factorial(n);
  std::vector<Rational> c(n + 2, Rational(0));
  for (std::size_t k = 0; k <= n; ++k) {
    Rational v = Rational(n_fact) * B[k] / Rational(factorial(k));
    c[n + 1 - k] = (k % 2 == 0) ? v : -v;
  }
  return ShiftedSeq(std::move(c));
}

ShiftedSeq integrate_shifted(const ShiftedSeq& a) {
  std::vector<Rational> c;
  c.reserve(a.order() + 1);
  c.push_back(Rational(0));
  c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
  return ShiftedSeq(std::move(c));
}

ShiftedSeq differentiate_shifted(const ShiftedSeq& a) {
  if (a.order() < 2) {
    throw std::invalid_argument("cannot differentiate order-1 truncation");
  }
  std::vector<Rational> c(a.coeffs().begin() + 1, a.coeffs().end());
  return ShiftedSeq(std::move(c));
}

Rational definite_integral_01(const ShiftedSeq& a) {
  Rational sum;
  for (std::size_t k = 0; k < a.order(); ++k) {
    if (a[k].is_zero()) {
      continue;
    }
    Rational w = Rational(1) / Rational(factorial(k + 1));
    if (k % 2 == 1) {
      w = -w;
    }
    sum += a[k] * w;
  }
  return sum;
}

Poly to_poly(const ShiftedSeq& a) {
  // Horner in (x - 1) over the factorial-scaled coefficients.
  const Poly x_minus_1(std::vector<Rational>{Rational(-1), Rational(1)});
  Poly acc;
  for (std::size_t k = a.order(); k-- > 0;) {
    acc = acc * x_minus_1 + Poly::constant(a[k] / Rational(factorial(k)));
  }
  return acc;
}

ShiftedSeq from_poly(const Poly& p) {
  const Poly q = taylor_shift(p, Rational(1));  // q(y) = p(y + 1)
  std::vector<Rational> c;
  c.reserve(q.coeffs().size());
  for (std::size_t k = 0; k < q.coeffs().size(); ++k) {
    c.push_back(q.coeff(k) * Rational(factorial(k)));
  }
  return ShiftedSeq(std::move(c));
}

}  // namespace egfkit
