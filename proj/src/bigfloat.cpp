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

#include "egfkit/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>

namespace egfkit {

namespace {

constexpr mpfr_prec_t kMinPrec = 16;

mpfr_prec_t checked_prec(mpfr_prec_t prec) {
  if (prec < kMinPrec) {
    throw std::invalid_argument("precision below 16 bits");
  }
  return prec;
}

}  // namespace

BigReal::BigReal(mpfr_prec_t prec) {
  mpfr_init2(v_, checked_prec(prec));
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(double x, mpfr_prec_t prec) {
  mpfr_init2(v_, checked_prec(prec));
  mpfr_set_d(v_, x, MPFR_RNDN);
}

BigReal::BigReal(long x, mpfr_prec_t prec) {
  mpfr_init2(v_, checked_prec(prec));
  mpfr_set_si(v_, x, MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& z, mpfr_prec_t prec) {
  mpfr_init2(v_, checked_prec(prec));
  mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const Rational& q, mpfr_prec_t prec) {
  mpfr_init2(v_, checked_prec(prec));
  mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));  // also clears the old value
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  if (this != &o) {
    mpfr_swap(v_, o.v_);
  }
  return *this;
}

BigReal::~BigReal() {
  mpfr_clear(v_);
}

BigReal BigReal::from_string(const std::string& text, mpfr_prec_t prec) {
  BigReal r(prec);
  if (text.empty() || mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("malformed number: \"" + text + "\"");
  }
  return r;
}

BigReal BigReal::e(mpfr_prec_t prec) {
  BigReal one(1L, prec);
  return exp(one);
}

BigReal BigReal::pi(mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow2(long e, mpfr_prec_t prec) {
  BigReal r(1L, prec);
  mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

BigReal BigReal::round_to(mpfr_prec_t prec) const {
  BigReal r(checked_prec(prec));
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigReal::str() const {
  const size_t digits = mpfr_get_str_ndigits(10, precision());
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", static_cast<int>(digits - 1), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

namespace {

using mpfr_binary_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

BigReal binary_op(const BigReal& a, const BigReal& b, mpfr_binary_fn fn) {
  BigReal r(std::max(a.precision(), b.precision()));
  fn(const_cast<mpfr_ptr>(r.raw()), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

using mpfr_unary_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

BigReal unary_op(const BigReal& a, mpfr_unary_fn fn) {
  BigReal r(a.precision());
  fn(const_cast<mpfr_ptr>(r.raw()), a.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

BigReal operator+(const BigReal& a, const BigReal& b) { return binary_op(a, b, mpfr_add); }
BigReal operator-(const BigReal& a, const BigReal& b) { return binary_op(a, b, mpfr_sub); }
BigReal operator*(const BigReal& a, const BigReal& b) { return binary_op(a, b, mpfr_mul); }
BigReal operator/(const BigReal& a, const BigReal& b) { return binary_op(a, b, mpfr_div); }

BigReal operator-(const BigReal& a) { return unary_op(a, mpfr_neg); }

BigReal& BigReal::operator+=(const BigReal& o) { return *this = *this + o; }
BigReal& BigReal::operator-=(const BigReal& o) { return *this = *this - o; }
BigReal& BigReal::operator*=(const BigReal& o) { return *this = *this * o; }
BigReal& BigReal::operator/=(const BigReal& o) { return *this = *this / o; }

BigReal abs(const BigReal& a) { return unary_op(a, mpfr_abs); }
BigReal sqrt(const BigReal& a) { return unary_op(a, mpfr_sqrt); }
BigReal exp(const BigReal& a) { return unary_op(a, mpfr_exp); }
BigReal log(const BigReal& a) { return unary_op(a, mpfr_log); }
BigReal sin(const BigReal& a) { return unary_op(a, mpfr_sin); }
BigReal cos(const BigReal& a) { return unary_op(a, mpfr_cos); }
BigReal hypot(const BigReal& a, const BigReal& b) { return binary_op(a, b, mpfr_hypot); }

BigReal pow_ui(const BigReal& base, unsigned long e) {
  BigReal r(base.precision());
  mpfr_pow_ui(const_cast<mpfr_ptr>(r.raw()), base.raw(), e, MPFR_RNDN);
  return r;
}

BigComplex::BigComplex(BigReal re) : re_(std::move(re)), im_(re_.precision()) {}

mpfr_prec_t BigComplex::precision() const {
  return std::max(re_.precision(), im_.precision());
}

BigComplex BigComplex::round_to(mpfr_prec_t prec) const {
  return {re_.round_to(prec), im_.round_to(prec)};
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return {a.re_ + b.re_, a.im_ + b.im_};
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return {a.re_ - b.re_, a.im_ - b.im_};
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

BigComplex operator*(const BigComplex& a, const BigReal& s) {
  return {a.re_ * s, a.im_ * s};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  const BigReal den = b.re_ * b.re_ + b.im_ * b.im_;
  return {(a.re_ * b.re_ + a.im_ * b.im_) / den,
          (a.im_ * b.re_ - a.re_ * b.im_) / den};
}

BigComplex operator/(const BigComplex& a, const BigReal& s) {
  return {a.re_ / s, a.im_ / s};
}

BigComplex operator-(const BigComplex& a) {
  return {-a.re_, -a.im_};
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  return *this = *this + o;
}

BigComplex exp(const BigComplex& a) {
  const BigReal mag = exp(a.re_);
  return {mag * cos(a.im_), mag * sin(a.im_)};
}

BigComplex pow_real_base(const BigReal& base, const BigComplex& z) {
  if (base.sign() <= 0) {
    throw std::domain_error("pow_real_base requires a positive base");
  }
  const BigReal lb = log(base);
  return exp(BigComplex(z.real() * lb, z.imag() * lb));
}

BigComplex parse_complex(const std::string& text, mpfr_prec_t prec) {
  std::string s;
  for (char c : text) {
    if (c != ' ') {
      s.push_back(c);
    }
  }
  if (s.empty()) {
    throw std::invalid_argument("empty number");
  }
  if (s.back() != 'i' && s.back() != 'I') {
    return BigComplex(BigReal::from_string(s, prec));
  }
  s.pop_back();
  // split off the real part at the last sign that is not an exponent sign
  std::size_t split = std::string::npos;
  for (std::size_t p = s.size(); p-- > 1;) {
    if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  std::string real_part = "0";
  std::string imag_part = s;
  if (split != std::string::npos) {
    real_part = s.substr(0, split);
    imag_part = s.substr(split);
  }
  if (imag_part.empty() || imag_part == "+") {
    imag_part = "1";
  } else if (imag_part == "-") {
    imag_part = "-1";
  }
  return {BigReal::from_string(real_part, prec), BigReal::from_string(imag_part, prec)};
}

}  // namespace egfkit
