// Copyright 2026 The euler-arnold Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once
// Acceptance criteria as runnable checks. Every tolerance is pinned here.
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ea::verification {

struct Measurement {
  std::string name;
  double value = 0.0;
  /// "<=", ">=", "in" (lo <= value <= hi) or "info" (no verdict).
  std::string relation;
  double lo = 0.0;
  double hi = 0.0;
  bool passed() const;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Measurement> measurements;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  /// Set when the check itself threw.
  std::string error;
  bool passed() const;
};

enum class Suite { Oracle, Conservation, Convergence, Monitors, All };

/// Throws ContractError for unknown names.
Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite s);
const std::vector<int>& suite_criteria(Suite s);

inline constexpr int kCriterionCount = 10;
std::string_view criterion_title(int id);

/// Runs one criterion (1..10); exceptions are captured in `error`.
CriterionResult run_criterion(int id);

/// Thread count from EA_NUM_THREADS, 1 when unset or invalid.
int thread_count_from_env();

using Reporter = std::function<void(const CriterionResult&)>;

/// Runs the suite's criteria on `threads` workers (<= 0: from the
/// environment). Results come back in criterion order; `report` is called
/// in that order as well.
std::vector<CriterionResult> run_suite(Suite s, int threads = 0, const Reporter& report = {});

/// "PASS  4  Burgers exactness  (0.8 s)"
std::string summary_line(const CriterionResult& r);
/// One indented line per measurement.
std::vector<std::string> detail_lines(const CriterionResult& r);

}  // namespace ea::verification
