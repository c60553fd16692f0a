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


// A MiniLang engine speaking the external engine protocol: reads a
// conformance test on standard input, exits 0 when it passes and 1 when it
// fails, with the reason on standard error.

#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "engines/mini_engine.h"
#include "engines/runner.h"
#include "injector/conformance_test.h"

using namespace specdiff;

int main(int argc, char** argv) {
  CLI::App app{"MiniLang engine reading a conformance test on standard input"};
  std::vector<std::string> bugs;
  app.add_option("--bug", bugs, "Seeded engine bug flag (repeatable)");
  CLI11_PARSE(app, argc, argv);

  engines::EngineBugCatalog catalog;
  try {
    catalog = engines::EngineBugCatalog::FromNames(bugs);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  injector::ConformanceTest test;
  try {
    test = injector::ParseTest(text);
  } catch (const std::exception& e) {
    std::cerr << "malformed test: " << e.what() << "\n";
    return 2;
  }
  engines::ExecOutcome outcome =
      engines::RunMiniEngineSource(injector::ExecutedSource(test), catalog);
  if (test.tag == "Abort") return 0;
  if (outcome.kind == engines::ExecOutcome::Kind::kResourceLimit) {
    std::cerr << "Timeout: resource limit\n";
    return 1;
  }
  std::string message = engines::Judge(test, outcome);
  if (message.empty()) return 0;
  if (outcome.failed_assertion_line > 0 &&
      !injector::AssertionIdAtLine(test, outcome.failed_assertion_line).empty()) {
    std::cerr << "AssertionError at line " << outcome.failed_assertion_line << "\n";
  } else {
    std::cerr << message << "\n";
  }
  return 1;
}
