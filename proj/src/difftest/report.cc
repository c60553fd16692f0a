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


#include "difftest/report.h"

#include <cstdio>
#include <sstream>

namespace specdiff::difftest {
namespace {

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string Join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ",") + p;
  return out;
}

}  // namespace

Summary Summarize(const SuiteResults& results, const std::vector<BugReport>& reports) {
  Summary s;
  long engine_total = 0, spec_total = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::kEngineBug) {
      ++s.engine_bug_tests;
      engine_total += r.failing_count;
    } else {
      ++s.spec_candidate_tests;
      spec_total += r.failing_count;
    }
  }
  for (size_t t = 0; t < results.tags.size(); ++t)
    if (IsAbortTagged(results, t)) ++s.abort_tests;
  if (s.engine_bug_tests) s.engine_average_failing = double(engine_total) / s.engine_bug_tests;
  if (s.spec_candidate_tests) s.spec_average_failing = double(spec_total) / s.spec_candidate_tests;
  return s;
}

nlohmann::json ReportJson(const SuiteResults& results, const std::vector<BugReport>& reports,
                          const std::optional<SuspiciousnessRanking>& ranking, size_t top) {
  Summary s = Summarize(results, reports);
  nlohmann::json engine_bugs = nlohmann::json::array();
  nlohmann::json spec_candidates = nlohmann::json::array();
  for (const auto& c : ClusterReports(reports))
    (c.verdict == Verdict::kEngineBug ? engine_bugs : spec_candidates).push_back(ToJson(c));
  return {{"schema", kResultsSchema},
          {"summary",
           {{"tests", results.matrix.tests.size()},
            {"engines", results.matrix.engines},
            {"engine_bug_tests", s.engine_bug_tests},
            {"spec_candidate_tests", s.spec_candidate_tests},
            {"abort_tests", s.abort_tests},
            {"engine_average_failing", s.engine_average_failing},
            {"spec_average_failing", s.spec_average_failing}}},
          {"engine_bugs", engine_bugs},
          {"spec_candidates", spec_candidates},
          {"ranking", ranking ? ranking->ToJson(top) : nlohmann::json(nullptr)}};
}

std::string ReportText(const SuiteResults& results, const std::vector<BugReport>& reports,
                       const std::optional<SuspiciousnessRanking>& ranking, size_t top) {
  Summary s = Summarize(results, reports);
  std::ostringstream out;
  out << "tests: " << results.matrix.tests.size() << "  engines: "
      << Join(results.matrix.engines) << "\n";
  out << "engine-bug tests: " << s.engine_bug_tests << " (avg failing "
      << Fixed(s.engine_average_failing, 2) << ")\n";
  out << "spec-bug candidates: " << s.spec_candidate_tests << " (avg failing "
      << Fixed(s.spec_average_failing, 2) << ")\n";
  out << "abort-tagged tests: " << s.abort_tests << "\n";

  out << "\nclusters\n";
  for (const auto& c : ClusterReports(reports)) {
    out << "  " << VerdictName(c.verdict) << "  "
        << (c.engines.empty() ? "*" : Join(c.engines)) << "  " << c.key << "  "
        << c.tests.size() << (c.crashed ? "  crash" : "") << "  e.g. " << c.tests.front()
        << "\n";
  }

  out << "\nranking\n";
  if (!ranking) {
    out << "  (no failing tests)\n";
  } else {
    for (size_t i = 0; i < ranking->algorithms.size() && i < top; ++i) {
      const auto& a = ranking->algorithms[i];
      out << "  " << a.rank << "  " << a.algorithm << "  " << Fixed(a.score, 4) << "  step "
          << a.top_step << "\n";
    }
  }
  return out.str();
}

}  // namespace specdiff::difftest
