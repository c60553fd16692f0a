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


// Conformance test files: a first-line tag comment, the program body, a
// blank line and one assertion per line.

#ifndef SPECDIFF_INJECTOR_CONFORMANCE_TEST_H_
#define SPECDIFF_INJECTOR_CONFORMANCE_TEST_H_

#include <string>
#include <string_view>
#include <vector>

namespace specdiff::injector {

struct Assertion {
  std::string kind;    // VarValue, ObjValue, PropAttr, KeyOrder, Callable
  std::string id;      // "<kind>#<n>", n counted per kind from 1
  std::string source;  // one statement

  bool operator==(const Assertion&) const = default;
};

struct ConformanceTest {
  std::string tag;  // "Normal", "Throw", an error name, or "Abort"
  std::string body;
  std::vector<Assertion> assertions;

  bool operator==(const ConformanceTest&) const = default;
};

std::string Render(const ConformanceTest& test);

// Source line (1-based) of assertion `i` in the rendered file.
int AssertionLine(const ConformanceTest& test, size_t i);
// Id of the assertion rendered on `line`, or "" when it is not one.
std::string AssertionIdAtLine(const ConformanceTest& test, int line);

// Inverse of Render. Assertion kinds are inferred from the helper called;
// ids are renumbered. Throws std::invalid_argument without a tag line.
ConformanceTest ParseTest(std::string_view text);

// Source handed to an engine. Abort tests carry only the tag and the body.
std::string ExecutedSource(const ConformanceTest& test);

}  // namespace specdiff::injector

#endif  // SPECDIFF_INJECTOR_CONFORMANCE_TEST_H_
