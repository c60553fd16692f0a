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


#include "difftest/localize.h"

#include <algorithm>
#include <set>

namespace specdiff::difftest {

double Er1b(const SpectrumCounts& c) {
  return c.ef - static_cast<double>(c.ep) / (c.ep + c.np + 1);
}

int SuspiciousnessRanking::RankOf(const std::string& algorithm) const {
  for (const auto& a : algorithms)
    if (a.algorithm == algorithm) return a.rank;
  return 0;
}

nlohmann::json SuspiciousnessRanking::ToJson(size_t top) const {
  nlohmann::json list = nlohmann::json::array();
  for (size_t i = 0; i < algorithms.size() && i < top; ++i) {
    const auto& a = algorithms[i];
    list.push_back({{"rank", a.rank},
                    {"algorithm", a.algorithm},
                    {"score", a.score},
                    {"top_step", a.top_step}});
  }
  return {{"failed_tests", failed_tests}, {"passed_tests", passed_tests}, {"algorithms", list}};
}

SuspiciousnessRanking Localize(const std::vector<const spec::CoverageMap*>& failed,
                               const std::vector<const spec::CoverageMap*>& passed) {
  if (failed.empty()) throw NoFailures();
  SuspiciousnessRanking r;
  r.failed_tests = static_cast<int>(failed.size());
  r.passed_tests = static_cast<int>(passed.size());
  const int steps = spec::TotalSteps();
  r.step_scores.assign(steps, 0);
  for (int i = 0; i < steps; ++i) {
    SpectrumCounts c;
    for (const auto* f : failed) (f->HasStep(i) ? c.ef : c.nf)++;
    for (const auto* p : passed) (p->HasStep(i) ? c.ep : c.np)++;
    r.step_scores[i] = Er1b(c);
  }
  for (const auto& info : spec::Universe()) {
    RankedAlgorithm a;
    a.algorithm = std::string(info.name);
    a.top_step = 1;
    a.score = r.step_scores[info.step_offset];
    for (int s = 2; s <= info.steps; ++s) {
      double v = r.step_scores[info.step_offset + s - 1];
      if (v > a.score) a.score = v, a.top_step = s;
    }
    r.algorithms.push_back(a);
  }
  std::sort(r.algorithms.begin(), r.algorithms.end(), [](const auto& x, const auto& y) {
    return x.score != y.score ? x.score > y.score : x.algorithm < y.algorithm;
  });
  for (size_t i = 0; i < r.algorithms.size(); ++i) {
    bool tied = i > 0 && r.algorithms[i].score == r.algorithms[i - 1].score;
    r.algorithms[i].rank = tied ? r.algorithms[i - 1].rank : static_cast<int>(i) + 1;
  }
  return r;
}

SuspiciousnessRanking LocalizeResults(const SuiteResults& results,
                                      const std::vector<BugReport>& reports,
                                      const std::map<std::string, spec::CoverageMap>& coverage) {
  std::set<std::string> candidates;
  for (const auto& r : reports)
    if (r.verdict == Verdict::kSpecBugCandidate) candidates.insert(r.test);
  auto lookup = [&](const std::string& test) -> const spec::CoverageMap* {
    auto it = coverage.find(test);
    if (it == coverage.end()) throw std::invalid_argument("no coverage for test " + test);
    return &it->second;
  };
  std::vector<const spec::CoverageMap*> failed, passed;
  const auto& tests = results.matrix.tests;
  for (size_t t = 0; t < tests.size(); ++t) {
    if (IsAbortTagged(results, t) || candidates.count(tests[t])) {
      failed.push_back(lookup(tests[t]));
    } else if (PassesEverywhere(results, t)) {
      passed.push_back(lookup(tests[t]));
    }
  }
  return Localize(failed, passed);
}

}  // namespace specdiff::difftest
