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


// Engine bug vs. specification bug classification by failure counts.

#ifndef SPECDIFF_DIFFTEST_CLASSIFY_H_
#define SPECDIFF_DIFFTEST_CLASSIFY_H_

#include <string>
#include <string_view>
#include <vector>

#include "difftest/results.h"
#include "json.hpp"

namespace specdiff::difftest {

enum class Verdict { kEngineBug, kSpecBugCandidate };

std::string_view VerdictName(Verdict v);

struct BugReport {
  std::string test;
  Verdict verdict = Verdict::kEngineBug;
  std::vector<std::string> engines;  // failing engines, roster order
  int failing_count = 0;
  std::string cluster_key;
  bool crashed = false;  // some failing engine crashed
};

// floor(n / 2).
int DefaultThreshold(int engine_count);

// "Status:token" where token is the message's leading word with any "#n"
// suffix dropped, e.g. "Fail:VarValue" or "Fail:TypeError".
std::string MessageKey(const engines::TestOutcome& outcome);

// One report per test that fails somewhere and is not Abort-tagged.
// EngineBug when at most `threshold` engines fail (threshold < 0 means the
// default), SpecBugCandidate otherwise. Throws std::invalid_argument with
// fewer than two engines.
std::vector<BugReport> Classify(const SuiteResults& results, int threshold = -1);

struct Cluster {
  Verdict verdict;
  std::vector<std::string> engines;  // empty for spec candidates
  std::string key;
  std::vector<std::string> tests;
  bool crashed = false;
};

// Groups reports by verdict and message key; engine-bug reports are also
// split by failing engine set. Sorted by verdict, engines, key.
std::vector<Cluster> ClusterReports(const std::vector<BugReport>& reports);

nlohmann::json ToJson(const BugReport& report);
nlohmann::json ToJson(const Cluster& cluster);

}  // namespace specdiff::difftest

#endif  // SPECDIFF_DIFFTEST_CLASSIFY_H_
