// Copyright 2026 The specdiff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Suite results as stored in results.json.

#ifndef SPECDIFF_DIFFTEST_RESULTS_H_
#define SPECDIFF_DIFFTEST_RESULTS_H_

#include <string>
#include <vector>

#include "engines/runner.h"
#include "json.hpp"

namespace specdiff::difftest {

inline constexpr int kResultsSchema = 1;

struct SuiteResults {
  engines::ResultMatrix matrix;
  std::vector<std::string> tags;  // per test, same order as matrix.tests
};

// {"schema": 1, "engines": [...], "tests": [{"name", "tag", "outcomes":
// [{"engine", "status", "message"}]}]}
nlohmann::json ToJson(const SuiteResults& results);
// Throws std::invalid_argument on a schema mismatch or an incomplete matrix.
SuiteResults ResultsFromJson(const nlohmann::json& j);

bool PassesEverywhere(const SuiteResults& results, size_t test);
bool IsAbortTagged(const SuiteResults& results, size_t test);

}  // namespace specdiff::difftest

#endif  // SPECDIFF_DIFFTEST_RESULTS_H_
