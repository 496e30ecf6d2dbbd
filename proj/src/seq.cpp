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

#include "egfkit/seq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "egfkit/binomial.hpp"

namespace egfkit {

EgfSeq::EgfSeq(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) {
    throw std::invalid_argument("empty sequence");
  }
}

std::string EgfSeq::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t n = 0; n < c_.size(); ++n) {
    if (n != 0) {
      os << ", ";
    }
    os << c_[n];
  }
  os << ")";
  return os.str();
}

EgfSeq make_seq(std::vector<Rational> coeffs) {
  return EgfSeq(std::move(coeffs));
}

EgfSeq add(const EgfSeq& a, const EgfSeq& b) {
  const std::size_t K = std::min(a.order(), b.order());
  std::vector<Rational> c;
  c.reserve(K);
  for (std::size_t n = 0; n < K; ++n) {
    c.push_back(a[n] + b[n]);
  }
  return EgfSeq(std::move(c));
}

EgfSeq sub(const EgfSeq& a, const EgfSeq& b) {
  return add(a, scale(Rational(-1), b));
}

EgfSeq scale(const Rational& lambda, const EgfSeq& a) {
  std::vector<Rational> c;
  c.reserve(a.order());
  for (std::size_t n = 0; n < a.order(); ++n) {
    c.push_back(lambda * a[n]);
  }
  return EgfSeq(std::move(c));
}

EgfSeq star(const EgfSeq& a, const EgfSeq& b) {
  const std::size_t K = std::min(a.order(), b.order());
  std::vector<Rational> c;
  c.reserve(K);
  std::vector<mpz_class> row{1_mpz};  // Pascal row n, updated in place
  for (std::size_t n = 0; n < K; ++n) {
    Rational sum;
    for (std::size_t k = 0; k <= n; ++k) {
      sum += Rational(row[k]) * a[k] * b[n - k];
    }
    c.push_back(std::move(sum));
    next_binomial_row(row);
  }
  return EgfSeq(std::move(c));
}

EgfSeq hadamard(const EgfSeq& a, const EgfSeq& b) {
  const std::size_t K = std::min(a.order(), b.order());
  std::vector<Rational> c;
  c.reserve(K);
  for (std::size_t n = 0; n < K; ++n) {
    c.push_back(a[n] * b[n]);
  }
  return EgfSeq(std::move(c));
}

EgfSeq identity(std::size_t K) {
  if (K == 0) {
    throw std::invalid_argument("order must be positive");
  }
  std::vector<Rational> c(K, Rational(0));
  c[0] = Rational(1);
  return EgfSeq(std::move(c));
}

EgfSeq geometric(const Rational& j, std::size_t K) {
  if (K == 0) {
    throw std::invalid_argument("order must be positive");
  }
  std::vector<Rational> c;
  c.reserve(K);
  Rational p(1);
  for (std::size_t n = 0; n < K; ++n) {
    c.push_back(p);
    p *= j;
  }
  return EgfSeq(std::move(c));
}

EgfSeq inverse(const EgfSeq& a) {
  if (a[0].is_zero()) {
    throw std::domain_error("not invertible: zero leading coefficient");
  }
  const Rational lead_inv = Rational(1) / a[0];
  std::vector<Rational> b;
  b.reserve(a.order());
  b.push_back(lead_inv);
  std::vector<mpz_class> row{1_mpz};
  for (std::size_t n = 1; n < a.order(); ++n) {
    next_binomial_row(row);
    Rational sum;
    for (std::size_t k = 1; k <= n; ++k) {
      sum += Rational(row[k]) * a[k] * b[n - k];
    }
    b.push_back(-lead_inv * sum);
  }
  return EgfSeq(std::move(b));
}

EgfSeq shift_left(const EgfSeq& a) {
  if (a.order() < 2) {
    throw std::invalid_argument("cannot differentiate order-1 truncation");
  }
  std::vector<Rational> c(a.coeffs().begin() + 1, a.coeffs().end());
  return EgfSeq(std::move(c));
}

EgfSeq shift_right(const EgfSeq& a) {
  std::vector<Rational> c;
  c.reserve(a.order() + 1);
  c.push_back(Rational(0));
  c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
  return EgfSeq(std::move(c));
}

EgfSeq take(const EgfSeq& a, std::size_t K) {
  if (K == 0 || K > a.order()) {
    throw std::invalid_argument("bad truncation order");
  }
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().begin() + static_cast<std::ptrdiff_t>(K));
  return EgfSeq(std::move(c));
}

}  // namespace egfkit
