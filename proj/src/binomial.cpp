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

#include "egfkit/binomial.hpp"

namespace egfkit {

mpz_class binomial(unsigned long n, unsigned long k) {
  if (k > n) {
    return 0;
  }
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::vector<mpz_class> binomial_row(unsigned long n) {
  std::vector<mpz_class> row{1_mpz};
  row.reserve(n + 1);
  for (unsigned long i = 0; i < n; ++i) {
    next_binomial_row(row);
  }
  return row;
}

void next_binomial_row(std::vector<mpz_class>& row) {
  row.push_back(1);
  // walk backwards so each entry still sees the previous row's value
  for (std::size_t k = row.size() - 2; k >= 1; --k) {
    row[k] += row[k - 1];
  }
}

}  // namespace egfkit
