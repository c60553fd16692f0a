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


// Pipeline stages. Each one reads the previous stage's directory and writes
// its own, so stages can run separately or chained.

#ifndef SPECDIFF_PIPELINE_STAGES_H_
#define SPECDIFF_PIPELINE_STAGES_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "difftest/classify.h"
#include "difftest/localize.h"
#include "difftest/results.h"
#include "engines/runner.h"
#include "generator/pool.h"
#include "injector/conformance_test.h"
#include "pipeline/session.h"
#include "spec/universe.h"

namespace specdiff::pipeline {

namespace fs = std::filesystem;

std::string ReadFile(const fs::path& path);
void WriteFile(const fs::path& path, const std::string& content);
nlohmann::json ReadJson(const fs::path& path);
// Pretty-printed, trailing newline.
void WriteJson(const fs::path& path, const nlohmann::json& j);

// synth: one .mls per seed plus seeds.json [{file, covered_alternatives}].
std::vector<std::string> Synthesize(const SessionConfig& config);
void WriteSeeds(const std::vector<std::string>& seeds, const SessionConfig& config,
                const fs::path& dir);
// Same, with each seed's covered alternatives already known.
void WriteSeeds(const std::vector<std::string>& seeds,
                const std::vector<std::vector<std::string>>& covered_alternatives,
                const SessionConfig& config, const fs::path& dir);
// "Production:alt" for every alternative used in `tree`, sorted.
std::vector<std::string> CoveredAlternatives(const grammar::NodePtr& tree);
// Sources in seeds.json order.
std::vector<std::string> ReadSeeds(const fs::path& dir);

struct Generation {
  uint64_t rng_seed = 0;
  generator::GrowthStats stats;
  spec::CoverageRatio ratio;  // of this generation's own pool
  size_t programs = 0;
};

// Grows `filtered` once per seed rng_seed .. rng_seed + repeat - 1 and
// merges the results in seed order, dropping repeated sources.
generator::ProgramPool GrowGenerations(const generator::ProgramPool& filtered,
                                       const SessionConfig& config,
                                       generator::FragmentBank& bank,
                                       std::vector<Generation>* generations);

// filter / generate: prog_NNNNN.mls files plus pool.json and, per
// generation, coverage.csv (coverage_<seed>.csv when there are several).
void WritePool(const generator::ProgramPool& pool, const std::vector<Generation>& generations,
               const SessionConfig& config, const fs::path& dir);
// Re-parses and re-evaluates the programs under `config`'s spec bugs,
// keeping the recorded admission metadata.
generator::ProgramPool ReadPool(const fs::path& dir, const SessionConfig& config);
// A seed directory (seeds.json) is filtered; a pool directory is loaded.
generator::ProgramPool LoadPoolOrSeeds(const fs::path& dir, const SessionConfig& config);

struct GeneratedTest {
  std::string name;     // "t_0001"
  std::string program;  // pool file it came from
  injector::ConformanceTest test;
  spec::CoverageMap coverage;  // spec coverage of the body
};

std::vector<GeneratedTest> InjectPool(const generator::ProgramPool& pool,
                                      const SessionConfig& config);
// <name>.test.mls, manifest.json and coverage.json.
void WriteTests(const std::vector<GeneratedTest>& tests, const SessionConfig& config,
                const fs::path& dir);
// Tests in manifest order; coverage is filled when coverage.json exists.
std::vector<GeneratedTest> ReadTests(const fs::path& dir);
std::map<std::string, spec::CoverageMap> ReadCoverage(const fs::path& dir);

std::vector<engines::EngineHandle> LoadRoster(const SessionConfig& config);
difftest::SuiteResults RunTests(const std::vector<GeneratedTest>& tests,
                                const std::vector<engines::EngineHandle>& roster);

struct Localization {
  std::vector<difftest::BugReport> reports;
  std::optional<difftest::SuspiciousnessRanking> ranking;  // empty without failures
};

Localization LocalizeSession(const difftest::SuiteResults& results,
                             const std::map<std::string, spec::CoverageMap>& coverage,
                             const SessionConfig& config);
void WriteLocalization(const Localization& loc, const SessionConfig& config,
                       const fs::path& path);
void WriteReport(const difftest::SuiteResults& results, const Localization& loc,
                 const SessionConfig& config, const fs::path& dir);

struct PipelineRun {
  generator::ProgramPool pool;
  std::vector<Generation> generations;
  std::vector<GeneratedTest> tests;
  difftest::SuiteResults results;
  Localization localization;
};

// Inputs that do not depend on the session and can be shared between runs.
struct SharedInputs {
  const std::vector<std::string>* seeds = nullptr;  // replaces synth's computation
  generator::FragmentBank* bank = nullptr;
};

// synth, filter, generate, inject, run, localize, report under config.out.
// Throws StageError naming the failing stage; earlier artifacts stay.
PipelineRun RunPipeline(const SessionConfig& config, bool verbose = false,
                        const SharedInputs& shared = {});

}  // namespace specdiff::pipeline

#endif  // SPECDIFF_PIPELINE_STAGES_H_
