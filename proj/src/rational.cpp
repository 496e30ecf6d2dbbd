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

#include "egfkit/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace egfkit {

namespace {

void require_nonzero_den(const mpz_class& den) {
  if (sgn(den) == 0) {
    throw std::domain_error("zero denominator");
  }
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  require_nonzero_den(v_.get_den());
  v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den)
    : v_(std::move(num), std::move(den)) {
  require_nonzero_den(v_.get_den());
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational: \"" + text + "\"");
  }
  require_nonzero_den(q.get_den());
  q.canonicalize();
  Rational r;
  r.v_ = std::move(q);
  return r;
}

std::string Rational::str() const {
  return v_.get_str();  // canonical; prints "p/q" or "p"
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw std::domain_error("division by zero");
  }
  v_ /= o.v_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.v_ = -a.v_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational pow(const Rational& base, unsigned long exp) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), exp);
  return Rational(std::move(num), std::move(den));
}

}  // namespace egfkit
