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
#include <stdexcept>
#include <vector>

#include "egfkit/bigfloat.hpp"
#include "egfkit/rational.hpp"
#include "egfkit/seq.hpp"

namespace egfkit {

/// Tabulated function values at unit steps: values[i] = f(base + i).
/// The base offset is informational only.
template <typename T>
struct ValueTable {
  std::vector<T> values;
  T base{};
};

/// n-th forward difference at the base point, expanded as the alternating
/// binomial sum sum_{i=0}^n C(n,i) (-1)^{n-i} f(x+i). Exact.
/// Throws std::invalid_argument("table too short") when n >= length.
Rational forward_diff(const ValueTable<Rational>& f, std::size_t n);

/// Float counterpart. Alternating binomial sums cancel catastrophically, so
/// the sum runs at target_prec + max(32, n) working bits in fixed index
/// order i = 0..n, then rounds to target_prec. target_prec = 0 means the
/// largest precision present in the table.
BigReal forward_diff(const ValueTable<BigReal>& f, std::size_t n, mpfr_prec_t target_prec = 0);
BigComplex forward_diff(const ValueTable<BigComplex>& f, std::size_t n, mpfr_prec_t target_prec = 0);

/// (D^0 f(x), D^1 f(x), ..., D^{L-1} f(x)) by repeated pairwise differencing;
/// the inductive route, kept as an independent oracle for forward_diff.
template <typename T>
ValueTable<T> diff_table_recursive(const ValueTable<T>& f) {
  if (f.values.empty()) {
    throw std::invalid_argument("empty table");
  }
  std::vector<T> out;
  out.reserve(f.values.size());
  std::vector<T> level = f.values;
  out.push_back(level.front());
  while (level.size() > 1) {
    for (std::size_t i = 0; i + 1 < level.size(); ++i) {
      level[i] = level[i + 1] - level[i];
    }
    level.pop_back();
    out.push_back(level.front());
  }
  return {std::move(out), f.base};
}

/// The whole difference sequence as one convolution with the alternating
/// geometric vector: (f(x), f(x+1), ...) star (1, -1, 1, ...). Component n
/// equals forward_diff(f, n).
EgfSeq diff_seq_via_star(const ValueTable<Rational>& f);

}  // namespace egfkit
