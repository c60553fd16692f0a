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


#include "engines/runner.h"

#include <regex>
#include <set>
#include <stdexcept>

#include "engines/subprocess.h"
#include "grammar/lexer.h"
#include "spec/interpreter.h"

namespace specdiff::engines {
namespace {

ExecOutcome RunSpec(const std::string& source, const spec::SpecBugCatalog& bugs) {
  ExecOutcome out;
  spec::EvalResult r;
  try {
    spec::EvalOptions options;
    options.bugs = bugs;
    r = spec::EvaluateSource(source, options);
  } catch (const grammar::ParseFailure& e) {
    out.kind = ExecOutcome::Kind::kError;
    out.error_name = "SyntaxError";
    out.detail = e.what();
    return out;
  }
  const spec::FinalState& s = r.state;
  switch (s.termination) {
    case spec::Termination::kNormal:
      break;
    case spec::Termination::kThrow:
      out.kind = ExecOutcome::Kind::kThrow;
      out.detail = spec::Describe(s.thrown);
      break;
    case spec::Termination::kNamedError:
      out.kind = ExecOutcome::Kind::kError;
      out.error_name = s.error_name;
      out.failed_assertion_line = r.failed_assertion_line;
      break;
    case spec::Termination::kAbort:
      out.kind = s.resource_limit ? ExecOutcome::Kind::kResourceLimit : ExecOutcome::Kind::kAbort;
      out.detail = s.abort_algorithm + ":" + std::to_string(s.abort_step);
      break;
  }
  return out;
}

TestOutcome RunExternal(const EngineHandle& engine, const injector::ConformanceTest& test) {
  TestOutcome out{engine.id, Status::kPass, ""};
  ProcessResult p;
  try {
    p = RunProcess(engine.command, injector::ExecutedSource(test), engine.timeout_seconds);
  } catch (const std::exception& e) {
    return {engine.id, Status::kCrash, std::string("Crash: ") + e.what()};
  }
  std::string first = p.err.substr(0, p.err.find('\n'));
  if (p.timed_out) return {engine.id, Status::kTimeout, "Timeout: no result in time"};
  if (p.signaled) return {engine.id, Status::kCrash, "Crash: signal " + std::to_string(p.signal)};
  if (test.tag == "Abort") return out;
  if (p.exit_code == 0) return out;
  out.status = Status::kFail;
  static const std::regex kAssertionLine(R"(AssertionError at line (\d+))");
  std::smatch m;
  if (std::regex_search(first, m, kAssertionLine)) {
    std::string id = injector::AssertionIdAtLine(test, std::stoi(m[1]));
    if (!id.empty()) {
      out.message = id + ": assertion failed";
      return out;
    }
  }
  out.message = first.empty() ? "exit: status " + std::to_string(p.exit_code) : first;
  return out;
}

}  // namespace

std::string_view StatusName(Status s) {
  switch (s) {
    case Status::kPass: return "Pass";
    case Status::kFail: return "Fail";
    case Status::kCrash: return "Crash";
    case Status::kTimeout: return "Timeout";
  }
  return "";
}

Status StatusFromName(std::string_view name) {
  for (Status s : {Status::kPass, Status::kFail, Status::kCrash, Status::kTimeout})
    if (StatusName(s) == name) return s;
  throw std::invalid_argument("unknown status '" + std::string(name) + "'");
}

std::string Judge(const injector::ConformanceTest& test, const ExecOutcome& outcome) {
  if (test.tag == "Abort") return "";
  std::string actual;
  switch (outcome.kind) {
    case ExecOutcome::Kind::kNormal: actual = "Normal"; break;
    case ExecOutcome::Kind::kThrow: actual = "Throw"; break;
    case ExecOutcome::Kind::kError: actual = outcome.error_name; break;
    case ExecOutcome::Kind::kAbort: actual = "Abort"; break;
    case ExecOutcome::Kind::kResourceLimit: actual = "Timeout"; break;
  }
  if (actual == test.tag) return "";
  if (actual == "AssertionError") {
    std::string id = injector::AssertionIdAtLine(test, outcome.failed_assertion_line);
    if (!id.empty()) return id + ": assertion failed";
  }
  return actual + ": expected " + test.tag;
}

TestOutcome RunTest(const EngineHandle& engine, const injector::ConformanceTest& test) {
  if (engine.kind == EngineKind::kExternal) return RunExternal(engine, test);
  std::string source = injector::ExecutedSource(test);
  ExecOutcome exec = engine.kind == EngineKind::kSpec ? RunSpec(source, engine.spec_bugs)
                                                      : RunMiniEngineSource(source, engine.bugs);
  if (exec.kind == ExecOutcome::Kind::kResourceLimit)
    return {engine.id, Status::kTimeout, "Timeout: resource limit"};
  std::string message = Judge(test, exec);
  if (message.empty()) return {engine.id, Status::kPass, ""};
  return {engine.id, Status::kFail, message};
}

ResultMatrix RunSuite(const std::vector<EngineHandle>& engines,
                      const std::vector<injector::ConformanceTest>& tests,
                      const std::vector<std::string>& test_names) {
  if (engines.size() < 2) throw std::invalid_argument("need at least two engines");
  if (test_names.size() != tests.size()) throw std::invalid_argument("one name per test");
  std::set<std::string> ids;
  ResultMatrix m;
  for (const auto& e : engines) {
    if (!ids.insert(e.id).second) throw std::invalid_argument("duplicate engine id '" + e.id + "'");
    m.engines.push_back(e.id);
  }
  m.tests = test_names;
  for (const auto& t : tests) {
    std::vector<TestOutcome> row;
    for (const auto& e : engines) {
      try {
        row.push_back(RunTest(e, t));
      } catch (const std::exception& ex) {
        row.push_back({e.id, Status::kCrash, std::string("Crash: ") + ex.what()});
      }
    }
    m.cells.push_back(std::move(row));
  }
  return m;
}

std::vector<EngineHandle> DefaultRoster() {
  auto mini = [](std::string id, std::vector<std::string> bugs) {
    EngineHandle h;
    h.id = std::move(id);
    h.bugs = EngineBugCatalog::FromNames(bugs);
    return h;
  };
  return {mini("ref", {}), mini("alpha", {"EQ_COERCE_WRONG", "NEG_ZERO_LOST"}),
          mini("beta", {"FROZEN_WRITE_SILENT", "KEYORDER_ENGINE"}),
          mini("gamma", {"UNINIT_PARAM_UNDEFINED"})};
}

std::vector<EngineHandle> RosterFromJson(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("engine roster must be a JSON array");
  std::vector<EngineHandle> out;
  for (const auto& e : j) {
    EngineHandle h;
    h.id = e.at("id").get<std::string>();
    std::string kind = e.value("kind", "mini");
    std::vector<std::string> bugs = e.value("bugs", std::vector<std::string>{});
    if (kind == "mini") {
      h.kind = EngineKind::kInProcess;
      h.bugs = EngineBugCatalog::FromNames(bugs);
    } else if (kind == "spec") {
      h.kind = EngineKind::kSpec;
      h.spec_bugs = spec::SpecBugCatalog::FromNames(bugs);
    } else if (kind == "external") {
      h.kind = EngineKind::kExternal;
      h.command = e.at("command").get<std::string>();
    } else {
      throw std::invalid_argument("unknown engine kind '" + kind + "'");
    }
    h.timeout_seconds = e.value("timeout", 5.0);
    out.push_back(std::move(h));
  }
  return out;
}

nlohmann::json RosterToJson(const std::vector<EngineHandle>& roster) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& h : roster) {
    nlohmann::json e = {{"id", h.id}};
    switch (h.kind) {
      case EngineKind::kInProcess:
        e["kind"] = "mini";
        e["bugs"] = h.bugs.Names();
        break;
      case EngineKind::kSpec:
        e["kind"] = "spec";
        e["bugs"] = h.spec_bugs.Names();
        break;
      case EngineKind::kExternal:
        e["kind"] = "external";
        e["command"] = h.command;
        break;
    }
    e["timeout"] = h.timeout_seconds;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace specdiff::engines
