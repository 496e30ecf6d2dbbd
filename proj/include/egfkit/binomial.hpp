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

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace egfkit {

/// C(n, k), exact; 0 for k > n.
mpz_class binomial(unsigned long n, unsigned long k);

/// n!, exact.
mpz_class factorial(unsigned long n);

/// Pascal row (C(n,0), ..., C(n,n)).
std::vector<mpz_class> binomial_row(unsigned long n);

/// In-place step from row n to row n+1.
void next_binomial_row(std::vector<mpz_class>& row);

}  // namespace egfkit
