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


// Spectrum-based localization of specification bugs over algorithm steps.

#ifndef SPECDIFF_DIFFTEST_LOCALIZE_H_
#define SPECDIFF_DIFFTEST_LOCALIZE_H_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "difftest/classify.h"
#include "difftest/results.h"
#include "json.hpp"
#include "spec/universe.h"

namespace specdiff::difftest {

struct SpectrumCounts {
  int ef = 0;  // failing tests touching the element
  int ep = 0;  // passing tests touching it
  int nf = 0;
  int np = 0;
};

// ef - ep / (ep + np + 1)
double Er1b(const SpectrumCounts& c);

struct RankedAlgorithm {
  std::string algorithm;
  double score = 0;
  int rank = 0;
  int top_step = 0;  // step attaining the score
};

struct SuspiciousnessRanking {
  std::vector<RankedAlgorithm> algorithms;  // by rank, then name
  std::vector<double> step_scores;          // by flat step index
  int failed_tests = 0;
  int passed_tests = 0;

  // 0 when the algorithm is unknown.
  int RankOf(const std::string& algorithm) const;
  nlohmann::json ToJson(size_t top) const;
};

class NoFailures : public std::runtime_error {
 public:
  NoFailures() : std::runtime_error("no failing tests to localize") {}
};

// Scores every step, lifts to algorithms by max and ranks them (standard
// competition ranking, ties listed by name). Throws NoFailures when
// `failed` is empty.
SuspiciousnessRanking Localize(const std::vector<const spec::CoverageMap*>& failed,
                               const std::vector<const spec::CoverageMap*>& passed);

// failed = spec bug candidates plus Abort-tagged tests; passed = tests
// passing on every engine. `coverage` maps test names to spec coverage.
SuspiciousnessRanking LocalizeResults(const SuiteResults& results,
                                      const std::vector<BugReport>& reports,
                                      const std::map<std::string, spec::CoverageMap>& coverage);

}  // namespace specdiff::difftest

#endif  // SPECDIFF_DIFFTEST_LOCALIZE_H_
