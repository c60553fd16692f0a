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


#include "pipeline/stages.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "difftest/report.h"
#include "grammar/grammar.h"
#include "grammar/lexer.h"
#include "grammar/parser.h"
#include "grammar/synthesize.h"
#include "injector/inject.h"
#include "lang/ast.h"
#include "spec/interpreter.h"

namespace specdiff::pipeline {
namespace {

std::string Numbered(const char* prefix, size_t n, int width, const char* suffix) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%0*zu%s", prefix, width, n, suffix);
  return buf;
}

void EchoConfig(const SessionConfig& config, const fs::path& dir) {
  WriteJson(dir / "session.json", config.ToJson());
}

spec::SpecBugCatalog SpecBugs(const SessionConfig& config) {
  return spec::SpecBugCatalog::FromNames(config.spec_bugs);
}

const grammar::Grammar& SessionGrammar(const SessionConfig& config,
                                      std::optional<grammar::Grammar>& storage) {
  if (config.grammar.empty()) return grammar::Grammar::MiniLang();
  storage.emplace(grammar::Grammar::FromText(ReadFile(config.grammar)));
  return *storage;
}

spec::EvalResult EvaluateProgram(const grammar::NodePtr& tree, const SessionConfig& config) {
  spec::EvalOptions options;
  options.bugs = SpecBugs(config);
  return spec::Evaluate(lang::Lower(tree), options);
}

}  // namespace

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteFile(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

nlohmann::json ReadJson(const fs::path& path) { return nlohmann::json::parse(ReadFile(path)); }

void WriteJson(const fs::path& path, const nlohmann::json& j) {
  WriteFile(path, j.dump(2) + "\n");
}

std::vector<std::string> Synthesize(const SessionConfig& config) {
  if (config.grammar.empty() && config.start.empty()) return grammar::MiniLangSeeds();
  std::optional<grammar::Grammar> storage;
  const auto& g = SessionGrammar(config, storage);
  return grammar::NonRecursiveSynthesize(g, config.start.empty() ? g.start() : config.start);
}

std::vector<std::string> CoveredAlternatives(const grammar::NodePtr& tree) {
  std::vector<std::pair<std::string, int>> alts;
  grammar::CollectAlternatives(tree, alts);
  std::sort(alts.begin(), alts.end());
  alts.erase(std::unique(alts.begin(), alts.end()), alts.end());
  std::vector<std::string> out;
  for (const auto& [production, alt] : alts) out.push_back(production + ":" + std::to_string(alt));
  return out;
}

void WriteSeeds(const std::vector<std::string>& seeds, const SessionConfig& config,
                const fs::path& dir) {
  std::optional<grammar::Grammar> storage;
  const auto& g = SessionGrammar(config, storage);
  const std::string start = config.start.empty() ? g.start() : config.start;
  std::vector<std::vector<std::string>> covered;
  for (const auto& seed : seeds) covered.push_back(CoveredAlternatives(grammar::Parse(g, seed, start)));
  WriteSeeds(seeds, covered, config, dir);
}

void WriteSeeds(const std::vector<std::string>& seeds,
                const std::vector<std::vector<std::string>>& covered_alternatives,
                const SessionConfig& config, const fs::path& dir) {
  fs::create_directories(dir);
  nlohmann::json list = nlohmann::json::array();
  for (size_t i = 0; i < seeds.size(); ++i) {
    std::string file = Numbered("seed_", i + 1, 6, ".mls");
    WriteFile(dir / file, seeds[i] + "\n");
    list.push_back({{"file", file}, {"covered_alternatives", covered_alternatives.at(i)}});
  }
  WriteJson(dir / "seeds.json", list);
  EchoConfig(config, dir);
}

std::vector<std::string> ReadSeeds(const fs::path& dir) {
  std::vector<std::string> out;
  const nlohmann::json list = ReadJson(dir / "seeds.json");
  for (const auto& entry : list) {
    std::string text = ReadFile(dir / entry.at("file").get<std::string>());
    if (!text.empty() && text.back() == '\n') text.pop_back();
    out.push_back(std::move(text));
  }
  return out;
}

generator::ProgramPool GrowGenerations(const generator::ProgramPool& filtered,
                                       const SessionConfig& config,
                                       generator::FragmentBank& bank,
                                       std::vector<Generation>* generations) {
  generator::GrowthOptions options;
  options.budget = config.budget;
  generator::ProgramPool merged;
  merged.rng_seed = config.rng_seed;
  for (const auto& p : filtered.programs) merged.Restore(p);
  for (int i = 0; i < std::max(1, config.repeat); ++i) {
    generator::ProgramPool pool = filtered;
    pool.rng_seed = config.rng_seed + static_cast<uint64_t>(i);
    Generation g;
    g.rng_seed = pool.rng_seed;
    g.stats = generator::GrowPool(pool, SpecBugs(config), bank, options);
    g.ratio = pool.Ratio();
    g.programs = pool.programs.size();
    for (size_t k = filtered.programs.size(); k < pool.programs.size(); ++k)
      if (!merged.Contains(pool.programs[k].source)) merged.Restore(pool.programs[k]);
    if (generations) generations->push_back(std::move(g));
  }
  return merged;
}

void WritePool(const generator::ProgramPool& pool, const std::vector<Generation>& generations,
               const SessionConfig& config, const fs::path& dir) {
  fs::create_directories(dir);
  nlohmann::json programs = nlohmann::json::array();
  for (size_t i = 0; i < pool.programs.size(); ++i) {
    const auto& p = pool.programs[i];
    std::string file = Numbered("prog_", i + 1, 5, ".mls");
    WriteFile(dir / file, p.source + "\n");
    programs.push_back({{"file", file},
                        {"admitted_at_iteration", p.admitted_at},
                        {"method", p.method},
                        {"rng_seed", p.rng_seed},
                        {"new_steps", p.new_steps},
                        {"new_branches", p.new_branches}});
  }
  auto ratio = pool.Ratio();
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generations) {
    nlohmann::json methods = nlohmann::json::object();
    for (auto m : generator::kAllMethods) {
      std::string name(generator::MethodName(m));
      auto get = [&](const std::map<std::string, int>& counts) {
        auto it = counts.find(name);
        return it == counts.end() ? 0 : it->second;
      };
      methods[name] = {{"attempts", get(g.stats.attempts)},
                       {"admitted", get(g.stats.admitted)},
                       {"failed", get(g.stats.failed)}};
    }
    std::string csv_name = generations.size() == 1
                               ? std::string("coverage.csv")
                               : "coverage_" + std::to_string(g.rng_seed) + ".csv";
    gens.push_back({{"rng_seed", g.rng_seed},
                    {"iterations", g.stats.iterations},
                    {"programs", g.programs},
                    {"statement_coverage", g.ratio.statements},
                    {"branch_coverage", g.ratio.branches},
                    {"curve", csv_name},
                    {"methods", methods}});
    std::ostringstream csv;
    generator::WriteGrowthCsv(g.stats, csv);
    WriteFile(dir / csv_name, csv.str());
  }
  WriteJson(dir / "pool.json", {{"rng_seed", pool.rng_seed},
                                {"statement_coverage", ratio.statements},
                                {"branch_coverage", ratio.branches},
                                {"generations", gens},
                                {"programs", programs}});
  EchoConfig(config, dir);
}

generator::ProgramPool ReadPool(const fs::path& dir, const SessionConfig& config) {
  const auto& g = grammar::Grammar::MiniLang();
  nlohmann::json j = ReadJson(dir / "pool.json");
  generator::ProgramPool pool;
  pool.rng_seed = config.rng_seed;
  for (const auto& entry : j.at("programs")) {
    generator::PoolMember m;
    m.source = ReadFile(dir / entry.at("file").get<std::string>());
    if (!m.source.empty() && m.source.back() == '\n') m.source.pop_back();
    m.tree = grammar::Parse(g, m.source);
    m.coverage = EvaluateProgram(m.tree, config).coverage;
    m.admitted_at = entry.value("admitted_at_iteration", 0);
    m.method = entry.value("method", "seed");
    m.rng_seed = entry.value("rng_seed", uint64_t{0});
    m.new_steps = entry.value("new_steps", 0);
    m.new_branches = entry.value("new_branches", 0);
    pool.Restore(std::move(m));
  }
  return pool;
}

generator::ProgramPool LoadPoolOrSeeds(const fs::path& dir, const SessionConfig& config) {
  if (fs::exists(dir / "pool.json")) return ReadPool(dir, config);
  auto pool = generator::FilterSeeds(ReadSeeds(dir), SpecBugs(config));
  pool.rng_seed = config.rng_seed;
  return pool;
}

std::vector<GeneratedTest> InjectPool(const generator::ProgramPool& pool,
                                      const SessionConfig& config) {
  std::vector<GeneratedTest> out;
  for (size_t i = 0; i < pool.programs.size(); ++i) {
    const auto& p = pool.programs[i];
    spec::EvalResult r = EvaluateProgram(p.tree, config);
    GeneratedTest t;
    t.name = Numbered("t_", i + 1, 5, "");
    t.program = Numbered("prog_", i + 1, 5, ".mls");
    t.test = injector::Inject(p.source, r.state);
    t.coverage = std::move(r.coverage);
    out.push_back(std::move(t));
  }
  return out;
}

void WriteTests(const std::vector<GeneratedTest>& tests, const SessionConfig& config,
                const fs::path& dir) {
  fs::create_directories(dir);
  nlohmann::json manifest = nlohmann::json::array();
  nlohmann::json coverage = nlohmann::json::object();
  for (const auto& t : tests) {
    std::string file = t.name + ".test.mls";
    WriteFile(dir / file, injector::Render(t.test));
    std::vector<std::string> ids;
    for (const auto& a : t.test.assertions) ids.push_back(a.id);
    manifest.push_back({{"name", t.name},
                        {"file", file},
                        {"tag", t.test.tag},
                        {"assertions", ids},
                        {"source_program", t.program}});
    coverage[t.name] = t.coverage.ToJson();
  }
  WriteJson(dir / "manifest.json", {{"spec_bugs", config.spec_bugs}, {"tests", manifest}});
  WriteJson(dir / "coverage.json", coverage);
  EchoConfig(config, dir);
}

std::map<std::string, spec::CoverageMap> ReadCoverage(const fs::path& dir) {
  std::map<std::string, spec::CoverageMap> out;
  const nlohmann::json j = ReadJson(dir / "coverage.json");
  for (const auto& [name, c] : j.items())
    out.emplace(name, spec::CoverageMap::FromJson(c));
  return out;
}

std::vector<GeneratedTest> ReadTests(const fs::path& dir) {
  std::map<std::string, spec::CoverageMap> coverage;
  if (fs::exists(dir / "coverage.json")) coverage = ReadCoverage(dir);
  std::vector<GeneratedTest> out;
  const nlohmann::json manifest = ReadJson(dir / "manifest.json");
  for (const auto& entry : manifest.at("tests")) {
    GeneratedTest t;
    t.name = entry.at("name").get<std::string>();
    t.program = entry.value("source_program", "");
    t.test = injector::ParseTest(ReadFile(dir / entry.at("file").get<std::string>()));
    if (auto it = coverage.find(t.name); it != coverage.end()) t.coverage = it->second;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<engines::EngineHandle> LoadRoster(const SessionConfig& config) {
  if (config.engines.empty()) return engines::DefaultRoster();
  return engines::RosterFromJson(ReadJson(config.engines));
}

difftest::SuiteResults RunTests(const std::vector<GeneratedTest>& tests,
                                const std::vector<engines::EngineHandle>& roster) {
  std::vector<injector::ConformanceTest> suite;
  std::vector<std::string> names;
  difftest::SuiteResults r;
  for (const auto& t : tests) {
    suite.push_back(t.test);
    names.push_back(t.name);
    r.tags.push_back(t.test.tag);
  }
  r.matrix = engines::RunSuite(roster, suite, names);
  return r;
}

Localization LocalizeSession(const difftest::SuiteResults& results,
                             const std::map<std::string, spec::CoverageMap>& coverage,
                             const SessionConfig& config) {
  Localization loc;
  loc.reports = difftest::Classify(results, config.spec_threshold);
  try {
    loc.ranking = difftest::LocalizeResults(results, loc.reports, coverage);
  } catch (const difftest::NoFailures&) {
  }
  return loc;
}

void WriteLocalization(const Localization& loc, const SessionConfig& config,
                       const fs::path& path) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : loc.reports) reports.push_back(difftest::ToJson(r));
  WriteJson(path, {{"schema", difftest::kResultsSchema},
                   {"reports", reports},
                   {"ranking", loc.ranking ? loc.ranking->ToJson(config.top)
                                           : nlohmann::json(nullptr)}});
}

void WriteReport(const difftest::SuiteResults& results, const Localization& loc,
                 const SessionConfig& config, const fs::path& dir) {
  fs::create_directories(dir);
  size_t top = static_cast<size_t>(config.top);
  WriteJson(dir / "report.json", difftest::ReportJson(results, loc.reports, loc.ranking, top));
  WriteFile(dir / "report.txt", difftest::ReportText(results, loc.reports, loc.ranking, top));
  EchoConfig(config, dir);
}

PipelineRun RunPipeline(const SessionConfig& config, bool verbose,
                        const SharedInputs& shared) {
  const std::vector<std::string>* seeds = shared.seeds;
  const fs::path root = config.out;
  PipelineRun run;
  nlohmann::json timings = nlohmann::json::object();
  std::string stage;
  auto clock = std::chrono::steady_clock::now();
  auto begin = [&](const std::string& name) {
    stage = name;
    clock = std::chrono::steady_clock::now();
    if (verbose) std::cerr << "[" << name << "]\n";
  };
  auto end = [&]() {
    timings[stage] = std::chrono::duration<double>(std::chrono::steady_clock::now() - clock).count();
  };
  std::time_t started = std::time(nullptr);
  try {
    begin("config");
    SpecBugs(config);  // validates flag names
    auto roster = LoadRoster(config);
    fs::create_directories(root);
    EchoConfig(config, root);
    end();

    begin("synth");
    std::vector<std::string> synthesized;
    if (!seeds) {
      synthesized = Synthesize(config);
      seeds = &synthesized;
    }
    end();

    // Seeds are parsed once for both their alternatives and the filter.
    begin("filter");
    std::vector<std::vector<std::string>> covered(seeds->size());
    run.pool = generator::FilterSeeds(
        *seeds, SpecBugs(config),
        [&](size_t i, const grammar::NodePtr& tree) { covered[i] = CoveredAlternatives(tree); });
    run.pool.rng_seed = config.rng_seed;
    WriteSeeds(*seeds, covered, config, root / "seeds");
    WritePool(run.pool, {}, config, root / "filtered");
    end();

    begin("generate");
    std::optional<generator::FragmentBank> own_bank;
    generator::FragmentBank* bank = shared.bank;
    if (!bank) bank = &own_bank.emplace(grammar::Grammar::MiniLang());
    run.pool = GrowGenerations(run.pool, config, *bank, &run.generations);
    WritePool(run.pool, run.generations, config, root / "pool");
    end();

    begin("inject");
    run.tests = InjectPool(run.pool, config);
    WriteTests(run.tests, config, root / "tests");
    end();

    begin("run");
    run.results = RunTests(run.tests, roster);
    fs::create_directories(root / "run");
    WriteJson(root / "run" / "results.json", difftest::ToJson(run.results));
    WriteJson(root / "run" / "engines.json", engines::RosterToJson(roster));
    EchoConfig(config, root / "run");
    end();

    begin("localize");
    std::map<std::string, spec::CoverageMap> coverage;
    for (const auto& t : run.tests) coverage.emplace(t.name, t.coverage);
    run.localization = LocalizeSession(run.results, coverage, config);
    fs::create_directories(root / "localize");
    WriteLocalization(run.localization, config, root / "localize" / "localization.json");
    EchoConfig(config, root / "localize");
    end();

    begin("report");
    WriteReport(run.results, run.localization, config, root / "report");
    end();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, e.what());
  }
  WriteJson(root / "metadata.json", {{"started_at", static_cast<long long>(started)},
                                     {"finished_at", static_cast<long long>(std::time(nullptr))},
                                     {"stage_seconds", timings}});
  return run;
}

}  // namespace specdiff::pipeline
