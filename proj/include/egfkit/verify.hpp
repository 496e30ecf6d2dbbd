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
#include <cstdint>
#include <string>
#include <vector>

namespace egfkit::verify {

struct Options {
  /// Overrides a suite's default truncation order / range where one applies;
  /// 0 keeps the defaults.
  std::size_t max_order = 0;
  /// Seed for the randomized property suites. Same seed, same cases.
  std::uint64_t seed = 0x45474653454544ULL;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failure descriptions

  bool passed() const { return failures == 0; }
};

/// Names accepted by run_suite, excluding the aggregate "all".
const std::vector<std::string>& suite_names();

/// Runs one named identity suite. Throws std::invalid_argument for an
/// unknown name. "all" runs every suite and merges the counts.
SuiteResult run_suite(const std::string& name, const Options& opts = {});

/// Every suite, in suite_names() order.
std::vector<SuiteResult> run_all(const Options& opts = {});

}  // namespace egfkit::verify
