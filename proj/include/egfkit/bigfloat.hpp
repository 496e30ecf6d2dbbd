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

#include <mpfr.h>

#include <string>

#include "egfkit/rational.hpp"

namespace egfkit {

/// Arbitrary-precision real with an explicit precision in bits, backed by
/// MPFR. Every value carries its own precision (>= 16 bits); arithmetic
/// rounds to the larger of the operand precisions, so precision is never
/// silently reduced. Rounding mode is round-to-nearest throughout.
class BigReal {
 public:
  explicit BigReal(mpfr_prec_t prec = 128);  // zero at the given precision
  BigReal(double x, mpfr_prec_t prec);
  BigReal(long x, mpfr_prec_t prec);
  BigReal(const mpz_class& z, mpfr_prec_t prec);
  BigReal(const Rational& q, mpfr_prec_t prec);

  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  /// Parses decimal (optionally scientific) text. Throws
  /// std::invalid_argument on malformed input.
  static BigReal from_string(const std::string& text, mpfr_prec_t prec);

  static BigReal e(mpfr_prec_t prec);   // exp(1)
  static BigReal pi(mpfr_prec_t prec);
  static BigReal pow2(long e, mpfr_prec_t prec);  // 2^e, exact

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  BigReal round_to(mpfr_prec_t prec) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  /// Round-trippable decimal in scientific form: parsing the string back at
  /// the same precision recovers the value bit-exactly.
  std::string str() const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a);

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  friend BigReal abs(const BigReal& a);
  friend BigReal sqrt(const BigReal& a);
  friend BigReal exp(const BigReal& a);
  friend BigReal log(const BigReal& a);
  friend BigReal sin(const BigReal& a);
  friend BigReal cos(const BigReal& a);
  friend BigReal hypot(const BigReal& a, const BigReal& b);
  friend BigReal pow_ui(const BigReal& base, unsigned long e);

  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

/// Complex value over two BigReals. The precision of a complex value is the
/// larger of its parts' precisions.
class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
  BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit BigComplex(BigReal re);
  BigComplex(double re, double im, mpfr_prec_t prec)
      : re_(re, prec), im_(im, prec) {}

  const BigReal& real() const { return re_; }
  const BigReal& imag() const { return im_; }

  mpfr_prec_t precision() const;
  BigComplex round_to(mpfr_prec_t prec) const;

  bool is_real() const { return im_.is_zero(); }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigReal& s);
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator/(const BigComplex& a, const BigReal& s);
  friend BigComplex operator-(const BigComplex& a);

  BigComplex& operator+=(const BigComplex& o);

  friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

  friend BigReal abs(const BigComplex& a) { return hypot(a.re_, a.im_); }
  friend BigComplex exp(const BigComplex& a);

 private:
  BigReal re_;
  BigReal im_;
};

/// base^z = exp(z * log(base)) on the principal branch; base must be a
/// positive real, which makes the branch unambiguous.
BigComplex pow_real_base(const BigReal& base, const BigComplex& z);

/// Parses "a", "bi", "a+bi" or "a-bi" (a bare sign before i means +-1).
BigComplex parse_complex(const std::string& text, mpfr_prec_t prec);

}  // namespace egfkit
