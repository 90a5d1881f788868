// Copyright 2026 The qdla Authors
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

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace qdla {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Adds the n = 6 closure and the deeper efficiency fits.
  bool thorough = false;
};

/// Runs the structural invariant suite on the built-in ansätze at n = 4:
/// DLA dimensions and graph properties, trade-off verdicts, centralizer
/// counts, block-circuit structure, measurement budgets, gradient estimator
/// agreement and commutation patterns. A check that throws is reported as
/// failed with the exception message.
std::vector<CheckResult> run_invariant_suite(
    const VerifyOptions& options = {},
    const std::function<void(const CheckResult&)>& sink = {});

/// Fixed-width pass/fail table, one row per check.
std::string format_check_table(std::span<const CheckResult> results);

bool all_passed(std::span<const CheckResult> results);

}  // namespace qdla
