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


// Uniform test execution over in-process engines, the reference semantics
// and external engine commands.

#ifndef SPECDIFF_ENGINES_RUNNER_H_
#define SPECDIFF_ENGINES_RUNNER_H_

#include <string>
#include <vector>

#include "engines/engine_bugs.h"
#include "engines/mini_engine.h"
#include "injector/conformance_test.h"
#include "json.hpp"
#include "spec/bugs.h"

namespace specdiff::engines {

enum class EngineKind {
  kInProcess,  // MiniEngine with an EngineBugCatalog
  kSpec,       // the reference semantics running the test itself
  kExternal,   // a command reading the test on standard input
};

struct EngineHandle {
  std::string id;
  EngineKind kind = EngineKind::kInProcess;
  EngineBugCatalog bugs;
  spec::SpecBugCatalog spec_bugs;
  std::string command;
  double timeout_seconds = 5;
};

enum class Status { kPass, kFail, kCrash, kTimeout };

std::string_view StatusName(Status s);
Status StatusFromName(std::string_view name);

struct TestOutcome {
  std::string engine;
  Status status = Status::kPass;
  std::string message;  // empty on Pass
};

struct ResultMatrix {
  std::vector<std::string> tests;
  std::vector<std::string> engines;
  std::vector<std::vector<TestOutcome>> cells;  // [test][engine]
};

TestOutcome RunTest(const EngineHandle& engine, const injector::ConformanceTest& test);

// Throws std::invalid_argument with fewer than two engines or duplicate ids.
ResultMatrix RunSuite(const std::vector<EngineHandle>& engines,
                      const std::vector<injector::ConformanceTest>& tests,
                      const std::vector<std::string>& test_names);

// Compares what happened with the tag. Returns the failure message, or ""
// when the test passes.
std::string Judge(const injector::ConformanceTest& test, const ExecOutcome& outcome);

// One reference engine and three seeded ones.
std::vector<EngineHandle> DefaultRoster();
// [{id, kind: "mini"|"spec"|"external", command?, bugs?, timeout?}]
std::vector<EngineHandle> RosterFromJson(const nlohmann::json& j);
nlohmann::json RosterToJson(const std::vector<EngineHandle>& roster);

}  // namespace specdiff::engines

#endif  // SPECDIFF_ENGINES_RUNNER_H_
