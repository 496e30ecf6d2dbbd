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

#include "egfkit/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace egfkit {

namespace {

void trim(std::vector<Rational>& c) {
  while (c.size() > 1 && c.back().is_zero()) {
    c.pop_back();
  }
  if (c.empty()) {
    c.push_back(Rational(0));
  }
}

}  // namespace

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  trim(c_);
}

Poly Poly::constant(const Rational& c) {
  return Poly(std::vector<Rational>{c});
}

Poly Poly::monomial(const Rational& coeff, std::size_t power) {
  std::vector<Rational> c(power + 1, Rational(0));
  c[power] = coeff;
  return Poly(std::move(c));
}

const Rational& Poly::coeff(std::size_t k) const {
  static const Rational zero(0);
  return k < c_.size() ? c_[k] : zero;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc = acc * x + c_[k];
  }
  return acc;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c.is_zero()) {
      continue;
    }
    if (first) {
      if (c.sign() < 0) {
        os << "-";
      }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const Rational mag = c.sign() < 0 ? -c : c;
    if (k == 0 || mag != Rational(1)) {
      os << mag.str();
      if (k > 0) {
        os << "*";
      }
    }
    if (k >= 1) {
      os << var;
      if (k >= 2) {
        os << "^" << k;
      }
    }
  }
  return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) {
    c[k] += a.c_[k];
  }
  for (std::size_t k = 0; k < b.c_.size(); ++k) {
    c[k] += b.c_[k];
  }
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  return a + (-b);
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) {
    return Poly();
  }
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& p) {
  std::vector<Rational> c;
  c.reserve(p.c_.size());
  for (const Rational& x : p.c_) {
    c.push_back(s * x);
  }
  return Poly(std::move(c));
}

Poly operator-(const Poly& a) {
  return Rational(-1) * a;
}

Poly compose_affine(const Poly& p, const Rational& shift, const Rational& scale) {
  // Horner in the argument polynomial shift + scale*x.
  const Poly arg(std::vector<Rational>{shift, scale});
  Poly acc;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    acc = acc * arg + Poly::constant(p.coeff(k));
  }
  return acc;
}

Poly taylor_shift(const Poly& p, const Rational& c) {
  return compose_affine(p, c, Rational(1));
}

}  // namespace egfkit
