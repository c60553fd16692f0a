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


// Machine and human readable summary of a session.

#ifndef SPECDIFF_DIFFTEST_REPORT_H_
#define SPECDIFF_DIFFTEST_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include "difftest/classify.h"
#include "difftest/localize.h"
#include "json.hpp"

namespace specdiff::difftest {

inline constexpr size_t kDefaultTop = 15;

struct Summary {
  int engine_bug_tests = 0;
  int spec_candidate_tests = 0;
  int abort_tests = 0;
  double engine_average_failing = 0;  // 0 when there are none
  double spec_average_failing = 0;
};

Summary Summarize(const SuiteResults& results, const std::vector<BugReport>& reports);

// {"schema": 1, "summary", "engine_bugs", "spec_candidates", "ranking"}.
// `ranking` is null when there was nothing to localize.
nlohmann::json ReportJson(const SuiteResults& results, const std::vector<BugReport>& reports,
                          const std::optional<SuspiciousnessRanking>& ranking,
                          size_t top = kDefaultTop);
std::string ReportText(const SuiteResults& results, const std::vector<BugReport>& reports,
                       const std::optional<SuspiciousnessRanking>& ranking,
                       size_t top = kDefaultTop);

}  // namespace specdiff::difftest

#endif  // SPECDIFF_DIFFTEST_REPORT_H_
