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


// specdiff: grammar-driven differential testing of MiniLang engines against
// an executable reference semantics.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "difftest/report.h"
#include "grammar/lexer.h"
#include "pipeline/stages.h"
#include "spec/interpreter.h"
#include "spec/state.h"

namespace fs = std::filesystem;
using namespace specdiff;
using pipeline::SessionConfig;

namespace {

constexpr int kUsage = 1;
constexpr int kStageFailure = 2;

int SpecRun(const std::string& file, const std::vector<std::string>& bugs) {
  spec::EvalOptions options;
  options.bugs = spec::SpecBugCatalog::FromNames(bugs);
  spec::EvalResult r;
  try {
    r = spec::EvaluateSource(pipeline::ReadFile(file), options);
  } catch (const grammar::ParseFailure& e) {
    r.state.termination = spec::Termination::kNamedError;
    r.state.error_name = "SyntaxError";
  }
  nlohmann::json j = spec::ToJson(r.state);
  j["coverage"] = r.coverage.ToJson();
  std::cout << j.dump(2) << "\n";
  return r.state.termination == spec::Termination::kAbort ? 2 : 0;
}

void Generate(const SessionConfig& config, const fs::path& seed_dir, bool verbose) {
  auto filtered = pipeline::LoadPoolOrSeeds(seed_dir, config);
  generator::FragmentBank bank(grammar::Grammar::MiniLang());
  std::vector<pipeline::Generation> generations;
  auto pool = pipeline::GrowGenerations(filtered, config, bank, &generations);
  pipeline::WritePool(pool, generations, config, config.out);
  if (verbose) {
    auto r = pool.Ratio();
    std::cerr << "pool " << pool.programs.size() << " programs, statements " << r.statements
              << ", branches " << r.branches << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential testing of MiniLang engines against a reference semantics"};
  app.require_subcommand(1);
  app.fallthrough();

  SessionConfig config;
  bool verbose = false;
  app.add_option("--rng-seed", config.rng_seed, "Random seed")->capture_default_str();
  app.add_option("--out", config.out, "Output directory or file");
  app.add_flag("--verbose,-v", verbose, "Progress on standard error");
  app.add_option("--repeat", config.repeat,
                 "Independent generations (consecutive seeds) merged into one pool")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> bugs;
  auto add_bugs = [&](CLI::App* sub) {
    sub->add_option("--bug", bugs, "Seeded specification bug flag (repeatable)");
  };

  auto* synth = app.add_subcommand("synth", "Synthesize seed programs");
  synth->add_option("--grammar", config.grammar, "Grammar file (default: MiniLang)");
  synth->add_option("--start", config.start, "Start non-terminal");

  std::string seed_dir;
  auto* filter = app.add_subcommand("filter", "Keep seeds that add spec coverage");
  filter->add_option("--seed-dir", seed_dir, "Directory written by synth")->required();
  add_bugs(filter);

  auto* generate = app.add_subcommand("generate", "Grow the program pool");
  generate->add_option("--seed-dir", seed_dir, "Seed or pool directory")->required();
  generate->add_option("--budget", config.budget, "Iterations")->check(CLI::NonNegativeNumber);
  add_bugs(generate);

  std::string pool_dir;
  auto* inject = app.add_subcommand("inject", "Turn pool programs into conformance tests");
  inject->add_option("--pool", pool_dir, "Pool directory")->required();
  add_bugs(inject);

  std::string tests_dir;
  auto* run = app.add_subcommand("run", "Run the tests on every engine");
  run->add_option("--tests", tests_dir, "Test directory")->required();
  run->add_option("--engines", config.engines, "Engine roster (engines.json)");

  std::string results_file, coverage_dir;
  auto* localize = app.add_subcommand("localize", "Classify failures and rank spec algorithms");
  auto* report = app.add_subcommand("report", "Write report.json and report.txt");
  for (auto* sub : {localize, report}) {
    sub->add_option("--results", results_file, "results.json")->required();
    sub->add_option("--coverage", coverage_dir, "Test directory holding coverage.json")
        ->required();
    sub->add_option("--top", config.top, "Ranking length")->capture_default_str();
    sub->add_option("--spec-threshold", config.spec_threshold,
                    "Most failing engines still counted as an engine bug (default N/2)");
  }

  auto* pipe = app.add_subcommand("pipeline", "Run every stage");
  pipe->add_option("--budget", config.budget, "Iterations")->check(CLI::NonNegativeNumber);
  pipe->add_option("--engines", config.engines, "Engine roster (engines.json)");
  pipe->add_option("--top", config.top, "Ranking length")->capture_default_str();
  pipe->add_option("--spec-threshold", config.spec_threshold,
                   "Most failing engines still counted as an engine bug (default N/2)");
  add_bugs(pipe);

  std::string spec_file;
  auto* spec_run = app.add_subcommand("spec-run", "Evaluate one program on the reference semantics");
  spec_run->add_option("file", spec_file, "MiniLang source")->required();
  add_bugs(spec_run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  config.spec_bugs = bugs;

  std::string stage = app.get_subcommands().front()->get_name();
  try {
    spec::SpecBugCatalog::FromNames(config.spec_bugs);
  } catch (const std::exception& e) {
    std::cerr << "specdiff: " << e.what() << "\n";
    return kUsage;
  }
  try {
    if (*spec_run) return SpecRun(spec_file, bugs);
    if (*synth) {
      auto seeds = pipeline::Synthesize(config);
      pipeline::WriteSeeds(seeds, config, config.out);
      if (verbose) std::cerr << seeds.size() << " seeds\n";
    } else if (*filter) {
      auto pool = pipeline::LoadPoolOrSeeds(seed_dir, config);
      pipeline::WritePool(pool, {}, config, config.out);
      if (verbose) std::cerr << pool.programs.size() << " programs kept\n";
    } else if (*generate) {
      Generate(config, seed_dir, verbose);
    } else if (*inject) {
      auto pool = pipeline::ReadPool(pool_dir, config);
      pipeline::WriteTests(pipeline::InjectPool(pool, config), config, config.out);
    } else if (*run) {
      auto roster = pipeline::LoadRoster(config);
      auto results = pipeline::RunTests(pipeline::ReadTests(tests_dir), roster);
      fs::path out = config.out;
      if (fs::is_directory(out)) out /= "results.json";
      pipeline::WriteJson(out, difftest::ToJson(results));
    } else if (*localize || *report) {
      auto results = difftest::ResultsFromJson(pipeline::ReadJson(results_file));
      auto loc = pipeline::LocalizeSession(results, pipeline::ReadCoverage(coverage_dir), config);
      if (*report) {
        pipeline::WriteReport(results, loc, config, config.out);
      } else {
        fs::path out = config.out;
        if (fs::is_directory(out)) out /= "localization.json";
        pipeline::WriteLocalization(loc, config, out);
      }
      std::cout << difftest::ReportText(results, loc.reports, loc.ranking,
                                        static_cast<size_t>(config.top));
    } else if (*pipe) {
      auto r = pipeline::RunPipeline(config, verbose);
      if (verbose)
        std::cerr << difftest::ReportText(r.results, r.localization.reports,
                                          r.localization.ranking,
                                          static_cast<size_t>(config.top));
    }
  } catch (const pipeline::StageError& e) {
    std::cerr << "specdiff: stage " << e.what() << "\n";
    return kStageFailure;
  } catch (const std::exception& e) {
    std::cerr << "specdiff: stage " << stage << ": " << e.what() << "\n";
    return kStageFailure;
  }
  return 0;
}
