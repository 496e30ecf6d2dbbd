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

#include "egfkit/poly.hpp"
#include "egfkit/seq.hpp"

namespace egfkit {

/// Harmonic vector (1, 1/2, 1/3, ...): the EGF coefficients of (e^z - 1)/z
/// and the star-inverse of the Bernoulli vector.
EgfSeq H_seq(std::size_t K);

/// (B_0, ..., B_{K-1}) by the recursion
/// sum_{k=0}^{n} C(n+1,k) B_k = delta_{0,n} (n+1). Convention B_1 = -1/2.
EgfSeq bernoulli_numbers(std::size_t K);

/// Single Bernoulli number B_n.
Rational bernoulli_number(std::size_t n);

/// B_n(x) = sum_{k=0}^n C(n,k) B_k x^{n-k}; monic of degree n.
Poly bernoulli_poly(std::size_t n);

/// (B_0(x), ..., B_{K-1}(x)) at a fixed rational x, computed as the
/// convolution of the Bernoulli vector with the geometric vector of x.
EgfSeq bernoulli_poly_seq(const Rational& x, std::size_t K);

/// sum_{j=1}^{m} j^n by the Bernoulli closed form.
Rational faulhaber_sum(unsigned long n, unsigned long m);

/// sum_{j=1}^{m} j^n by literal summation; oracle for faulhaber_sum.
Rational power_sum_bruteforce(unsigned long n, unsigned long m);

/// S_n(x) in the monomial basis: degree n+1 with S_n(m) = sum_{j=1}^{m-1} j^n
/// for integers m >= 1. Expanded from the (x-1)-basis form
/// S_n(x) = sum_{k=0}^n (n!/k!) (-1)^k B_k (x-1)^{n+1-k}/(n+1-k)!.
Poly s_poly(std::size_t n);

}  // namespace egfkit
