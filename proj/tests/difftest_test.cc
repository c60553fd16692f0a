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

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "difftest/classify.h"
#include "difftest/localize.h"
#include "difftest/report.h"
#include "difftest/results.h"

namespace specdiff::difftest {
namespace {

using engines::Status;
using engines::TestOutcome;
using spec::Alg;
using spec::CoverageMap;

// Rows are strings over {P, F, C, T}, one char per engine.
SuiteResults Suite(const std::vector<std::string>& rows, std::vector<std::string> tags = {},
                   std::string message = "VarValue#1: assertion failed") {
  SuiteResults r;
  size_t n = rows.empty() ? 4 : rows[0].size();
  for (size_t e = 0; e < n; ++e) r.matrix.engines.push_back("e" + std::to_string(e));
  for (size_t t = 0; t < rows.size(); ++t) {
    r.matrix.tests.push_back("t" + std::to_string(t));
    r.tags.push_back(t < tags.size() ? tags[t] : "Normal");
    std::vector<TestOutcome> row;
    for (size_t e = 0; e < n; ++e) {
      TestOutcome o;
      o.engine = r.matrix.engines[e];
      switch (rows[t][e]) {
        case 'F': o.status = Status::kFail; o.message = message; break;
        case 'C': o.status = Status::kCrash; o.message = "Crash: signal 11"; break;
        case 'T': o.status = Status::kTimeout; o.message = "Timeout: resource limit"; break;
        default: break;
      }
      row.push_back(o);
    }
    r.matrix.cells.push_back(row);
  }
  return r;
}

TEST(Classify, FailureCounts) {
  std::vector<BugReport> r = Classify(Suite({"PFPP", "FFFF", "PPPP"}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].test, "t0");
  EXPECT_EQ(r[0].verdict, Verdict::kEngineBug);
  EXPECT_EQ(r[0].failing_count, 1);
  EXPECT_EQ(r[0].engines, std::vector<std::string>{"e1"});
  EXPECT_EQ(r[1].verdict, Verdict::kSpecBugCandidate);
  EXPECT_EQ(r[1].failing_count, 4);
}

TEST(Classify, ThresholdIsHalfTheRoster) {
  EXPECT_EQ(DefaultThreshold(4), 2);
  EXPECT_EQ(DefaultThreshold(5), 2);
  EXPECT_EQ(DefaultThreshold(2), 1);
  std::vector<BugReport> r = Classify(Suite({"FFPP", "FFFP"}));
  EXPECT_EQ(r[0].verdict, Verdict::kEngineBug);
  EXPECT_EQ(r[1].verdict, Verdict::kSpecBugCandidate);
  std::vector<BugReport> strict = Classify(Suite({"FFPP"}), 1);
  EXPECT_EQ(strict[0].verdict, Verdict::kSpecBugCandidate);
  EXPECT_THROW(Classify(Suite({"F"})), std::invalid_argument);
}

TEST(Classify, AbortTaggedTestsAreSkipped) {
  EXPECT_TRUE(Classify(Suite({"FFFF"}, {"Abort"})).empty());
}

TEST(Classify, CrashesAndTimeoutsCountAsFailures) {
  std::vector<BugReport> r = Classify(Suite({"PCPP", "TTTP"}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_TRUE(r[0].crashed);
  EXPECT_EQ(r[0].cluster_key, "Crash:Crash");
  EXPECT_EQ(r[1].verdict, Verdict::kSpecBugCandidate);
  EXPECT_EQ(r[1].cluster_key, "Timeout:Timeout");
}

TEST(Classify, EngineOrderDoesNotChangeVerdicts) {
  std::vector<std::string> rows = {"PFPP", "FFFF", "FFPF", "PPFF", "FPPP"};
  std::vector<BugReport> base = Classify(Suite(rows));
  std::vector<size_t> perm = {0, 1, 2, 3};
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<std::string> p = rows;
    for (size_t t = 0; t < rows.size(); ++t)
      for (size_t e = 0; e < 4; ++e) p[t][e] = rows[t][perm[e]];
    std::vector<BugReport> r = Classify(Suite(p));
    ASSERT_EQ(r.size(), base.size());
    for (size_t i = 0; i < r.size(); ++i) {
      EXPECT_EQ(r[i].verdict, base[i].verdict);
      EXPECT_EQ(r[i].failing_count, base[i].failing_count);
    }
  }
}

TEST(MessageKeys, LeadingToken) {
  TestOutcome o;
  o.status = Status::kFail;
  o.message = "VarValue#12: assertion failed";
  EXPECT_EQ(MessageKey(o), "Fail:VarValue");
  o.message = "TypeError: expected Normal";
  EXPECT_EQ(MessageKey(o), "Fail:TypeError");
}

TEST(Clusters, SplitByVerdictEnginesAndKey) {
  SuiteResults s = Suite({"PFPP", "PFPP", "PPFP", "FFFF"});
  s.matrix.cells[1][1].message = "KeyOrder#1: assertion failed";
  std::vector<Cluster> c = ClusterReports(Classify(s));
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0].verdict, Verdict::kEngineBug);
  size_t total = 0;
  for (const Cluster& x : c) total += x.tests.size();
  EXPECT_EQ(total, 4u);
  EXPECT_EQ(c.back().verdict, Verdict::kSpecBugCandidate);
  EXPECT_TRUE(c.back().engines.empty());
}

TEST(Er1b, Examples) {
  EXPECT_DOUBLE_EQ(Er1b({0, 0, 3, 7}), 0);
  EXPECT_DOUBLE_EQ(Er1b({0, 0, 0, 0}), 0);
  EXPECT_DOUBLE_EQ(Er1b({5, 0, 0, 9}), 5);
  EXPECT_DOUBLE_EQ(Er1b({2, 1, 0, 3}), 1.8);
}

CoverageMap Touch(std::vector<std::pair<Alg, int>> steps) {
  CoverageMap m;
  for (auto [a, s] : steps) m.TouchStep(a, s);
  return m;
}

TEST(Localize, SingleFailureDominates) {
  CoverageMap failed = Touch({{Alg::kAbstractEquality, 1}, {Alg::kAbstractEquality, 2}});
  CoverageMap passed = Touch({{Alg::kEvaluateUpdateExpression, 1}});
  SuspiciousnessRanking r = Localize({&failed}, {&passed});
  ASSERT_FALSE(r.algorithms.empty());
  EXPECT_EQ(r.algorithms[0].algorithm, "AbstractEquality");
  EXPECT_DOUBLE_EQ(r.algorithms[0].score, 1);
  EXPECT_EQ(r.algorithms[0].rank, 1);
  EXPECT_EQ(r.algorithms[0].top_step, 1);
  EXPECT_EQ(r.RankOf("AbstractEquality"), 1);
  EXPECT_EQ(r.RankOf("Nope"), 0);
  EXPECT_EQ(r.failed_tests, 1);
  EXPECT_EQ(r.passed_tests, 1);
  EXPECT_THROW(Localize({}, {&passed}), NoFailures);
}

TEST(Localize, CompetitionRanksAndNameTies) {
  CoverageMap f = Touch({{Alg::kAbstractEquality, 1}, {Alg::kEvaluateUpdateExpression, 1}});
  CoverageMap p = Touch({{Alg::kEvaluateUpdateExpression, 2}});
  SuspiciousnessRanking r = Localize({&f}, {&p});
  ASSERT_GE(r.algorithms.size(), 3u);
  EXPECT_EQ(r.algorithms[0].algorithm, "AbstractEquality");
  EXPECT_EQ(r.algorithms[1].algorithm, "EvaluateUpdateExpression");
  EXPECT_EQ(r.algorithms[0].rank, 1);
  EXPECT_EQ(r.algorithms[1].rank, 1);
  EXPECT_EQ(r.algorithms[2].rank, 3);
}

// Random spectra: algorithm scores are the max of their steps, and the
// four counts of every step add up to the test count.
TEST(Localize, AggregationDominanceAndConservation) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 20; ++round) {
    std::vector<CoverageMap> f(1 + rng() % 5), p(rng() % 6);
    for (auto* set : {&f, &p})
      for (CoverageMap& m : *set)
        for (int i = 0; i < spec::TotalSteps(); ++i)
          if (rng() % 4 == 0) m.TouchStep(spec::StepAt(i).alg, spec::StepAt(i).step);
    std::vector<const CoverageMap*> fp, pp;
    for (auto& m : f) fp.push_back(&m);
    for (auto& m : p) pp.push_back(&m);
    SuspiciousnessRanking r = Localize(fp, pp);
    for (int i = 0; i < spec::TotalSteps(); ++i) {
      SpectrumCounts c;
      for (auto* m : fp) (m->HasStep(i) ? c.ef : c.nf)++;
      for (auto* m : pp) (m->HasStep(i) ? c.ep : c.np)++;
      EXPECT_EQ(c.ef + c.nf + c.ep + c.np, static_cast<int>(f.size() + p.size()));
      EXPECT_DOUBLE_EQ(r.step_scores[i], Er1b(c));
    }
    for (const RankedAlgorithm& a : r.algorithms) {
      const spec::AlgorithmInfo& info = spec::Info(*spec::AlgFromName(a.algorithm));
      double best = r.step_scores[info.step_offset];
      for (int s = 0; s < info.steps; ++s) {
        EXPECT_GE(a.score, r.step_scores[info.step_offset + s]);
        best = std::max(best, r.step_scores[info.step_offset + s]);
      }
      EXPECT_DOUBLE_EQ(a.score, best);
      EXPECT_DOUBLE_EQ(r.step_scores[info.step_offset + a.top_step - 1], a.score);
    }
    for (size_t i = 1; i < r.algorithms.size(); ++i) {
      EXPECT_GE(r.algorithms[i - 1].score, r.algorithms[i].score);
      EXPECT_LE(r.algorithms[i - 1].rank, r.algorithms[i].rank);
    }
  }
}

TEST(Localize, AddingAFailureNeverLowersItsStep) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 20; ++round) {
    std::vector<CoverageMap> f(1 + rng() % 4), p(rng() % 5);
    for (auto* set : {&f, &p})
      for (CoverageMap& m : *set)
        for (int i = 0; i < spec::TotalSteps(); ++i)
          if (rng() % 3 == 0) m.TouchStep(spec::StepAt(i).alg, spec::StepAt(i).step);
    std::vector<const CoverageMap*> fp, pp;
    for (auto& m : f) fp.push_back(&m);
    for (auto& m : p) pp.push_back(&m);
    int e = static_cast<int>(rng() % spec::TotalSteps());
    double before = Localize(fp, pp).step_scores[e];
    CoverageMap only = Touch({{spec::StepAt(e).alg, spec::StepAt(e).step}});
    fp.push_back(&only);
    EXPECT_GE(Localize(fp, pp).step_scores[e], before);
  }
}

TEST(Localize, ResultsRouteAbortsAndCandidates) {
  SuiteResults s = Suite({"FFFF", "PPPP", "PPPP", "PFPP"}, {"Normal", "Abort", "Normal", "Normal"});
  std::map<std::string, CoverageMap> cov = {
      {"t0", Touch({{Alg::kAbstractEquality, 1}})},
      {"t1", Touch({{Alg::kEvaluateUpdateExpression, 3}})},
      {"t2", Touch({{Alg::kAbstractEquality, 2}})},
      {"t3", Touch({{Alg::kAbstractEquality, 3}})}};
  SuspiciousnessRanking r = LocalizeResults(s, Classify(s), cov);
  EXPECT_EQ(r.failed_tests, 2);
  EXPECT_EQ(r.passed_tests, 1);
  EXPECT_EQ(r.RankOf("AbstractEquality"), 1);
  EXPECT_EQ(r.RankOf("EvaluateUpdateExpression"), 1);

  SuiteResults clean = Suite({"PPPP", "PFPP"});
  EXPECT_THROW(LocalizeResults(clean, Classify(clean), cov), NoFailures);
}

TEST(Results, JsonRoundTrip) {
  SuiteResults s = Suite({"PFPP", "CPPT"}, {"Normal", "TypeError"});
  SuiteResults back = ResultsFromJson(ToJson(s));
  EXPECT_EQ(ToJson(back), ToJson(s));
  EXPECT_EQ(ToJson(s)["schema"], 1);
  nlohmann::json bad = ToJson(s);
  bad["schema"] = 2;
  EXPECT_THROW(ResultsFromJson(bad), std::invalid_argument);
  EXPECT_TRUE(PassesEverywhere(Suite({"PPPP"}), 0));
  EXPECT_FALSE(PassesEverywhere(s, 0));
  EXPECT_TRUE(IsAbortTagged(Suite({"PPPP"}, {"Abort"}), 0));
}

TEST(Report, EmptyInputs) {
  SuiteResults s = Suite({});
  std::vector<BugReport> none;
  nlohmann::json j = ReportJson(s, none, std::nullopt);
  EXPECT_TRUE(j["engine_bugs"].empty());
  EXPECT_TRUE(j["spec_candidates"].empty());
  EXPECT_TRUE(j["ranking"].is_null());
  Summary sum = Summarize(s, none);
  EXPECT_EQ(sum.engine_bug_tests, 0);
  EXPECT_EQ(sum.engine_average_failing, 0);
  EXPECT_FALSE(ReportText(s, none, std::nullopt).empty());
}

TEST(Report, SummaryAndTopLimit) {
  SuiteResults s = Suite({"PFPP", "FFFF", "FFFP", "PPPP"}, {"Normal", "Normal", "Normal", "Abort"});
  std::vector<BugReport> reports = Classify(s);
  Summary sum = Summarize(s, reports);
  EXPECT_EQ(sum.engine_bug_tests, 1);
  EXPECT_EQ(sum.spec_candidate_tests, 2);
  EXPECT_EQ(sum.abort_tests, 1);
  EXPECT_DOUBLE_EQ(sum.engine_average_failing, 1);
  EXPECT_DOUBLE_EQ(sum.spec_average_failing, 3.5);

  CoverageMap f;
  for (int i = 0; i < spec::TotalSteps(); ++i) f.TouchStep(spec::StepAt(i).alg, spec::StepAt(i).step);
  SuspiciousnessRanking r = Localize({&f}, {});
  EXPECT_GT(r.algorithms.size(), kDefaultTop);
  nlohmann::json j = ReportJson(s, reports, r);
  EXPECT_LE(j["ranking"]["algorithms"].size(), kDefaultTop);
  EXPECT_LE(ReportJson(s, reports, r, 3)["ranking"]["algorithms"].size(), 3u);
}

}  // namespace
}  // namespace specdiff::difftest
