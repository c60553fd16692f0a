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


#include "difftest/classify.h"

#include <map>
#include <stdexcept>
#include <tuple>

namespace specdiff::difftest {

std::string_view VerdictName(Verdict v) {
  return v == Verdict::kEngineBug ? "EngineBug" : "SpecBugCandidate";
}

int DefaultThreshold(int engine_count) { return engine_count / 2; }

std::string MessageKey(const engines::TestOutcome& outcome) {
  std::string token = outcome.message.substr(0, outcome.message.find_first_of(" :"));
  if (auto hash = token.find('#'); hash != std::string::npos) token.resize(hash);
  return std::string(engines::StatusName(outcome.status)) + ":" + token;
}

std::vector<BugReport> Classify(const SuiteResults& results, int threshold) {
  const auto& m = results.matrix;
  const int n = static_cast<int>(m.engines.size());
  if (n < 2) throw std::invalid_argument("classification needs at least two engines");
  if (threshold < 0) threshold = DefaultThreshold(n);
  std::vector<BugReport> out;
  for (size_t t = 0; t < m.tests.size(); ++t) {
    if (IsAbortTagged(results, t)) continue;
    BugReport r;
    r.test = m.tests[t];
    std::map<std::string, int> keys;
    for (const auto& cell : m.cells[t]) {
      if (cell.status == engines::Status::kPass) continue;
      r.engines.push_back(cell.engine);
      if (cell.status == engines::Status::kCrash) r.crashed = true;
      ++keys[MessageKey(cell)];
    }
    r.failing_count = static_cast<int>(r.engines.size());
    if (r.failing_count == 0) continue;
    r.verdict = r.failing_count <= threshold ? Verdict::kEngineBug : Verdict::kSpecBugCandidate;
    // Most common key among the failing engines; ties go to the smaller key.
    int best = 0;
    for (const auto& [key, count] : keys)
      if (count > best) best = count, r.cluster_key = key;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Cluster> ClusterReports(const std::vector<BugReport>& reports) {
  using Key = std::tuple<int, std::vector<std::string>, std::string>;
  std::map<Key, Cluster> clusters;
  for (const auto& r : reports) {
    std::vector<std::string> engines;
    if (r.verdict == Verdict::kEngineBug) engines = r.engines;
    Key key{static_cast<int>(r.verdict), engines, r.cluster_key};
    auto [it, inserted] = clusters.try_emplace(key);
    Cluster& c = it->second;
    if (inserted) {
      c.verdict = r.verdict;
      c.engines = engines;
      c.key = r.cluster_key;
    }
    c.tests.push_back(r.test);
    c.crashed = c.crashed || r.crashed;
  }
  std::vector<Cluster> out;
  for (auto& [k, c] : clusters) out.push_back(std::move(c));
  return out;
}

nlohmann::json ToJson(const BugReport& r) {
  return {{"test", r.test},
          {"verdict", std::string(VerdictName(r.verdict))},
          {"engines", r.engines},
          {"failing_count", r.failing_count},
          {"cluster_key", r.cluster_key},
          {"crashed", r.crashed}};
}

nlohmann::json ToJson(const Cluster& c) {
  return {{"verdict", std::string(VerdictName(c.verdict))},
          {"engines", c.engines},
          {"key", c.key},
          {"count", c.tests.size()},
          {"crashed", c.crashed},
          {"tests", c.tests}};
}

}  // namespace specdiff::difftest
