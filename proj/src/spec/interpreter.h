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


// Reference semantics for MiniLang. Every abstract algorithm records its
// numbered steps and branch outcomes in a CoverageMap as it runs.

#ifndef SPECDIFF_SPEC_INTERPRETER_H_
#define SPECDIFF_SPEC_INTERPRETER_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lang/ast.h"
#include "spec/bugs.h"
#include "spec/state.h"
#include "spec/universe.h"

namespace specdiff::spec {

struct EvalOptions {
  SpecBugCatalog bugs;
  // Record, per algorithm, the innermost syntax nodes that ran its steps.
  bool attribution = false;
  int64_t fuel = 200000;  // recorded steps before a resource abort
  int max_call_depth = 64;
};

struct EvalResult {
  FinalState state;
  CoverageMap coverage;
  // Algorithm -> concrete syntax node ids, in first-touch order.
  std::map<Alg, std::vector<int>> attribution;
  // Line of the assertion helper call that failed, or 0.
  int failed_assertion_line = 0;
};

EvalResult Evaluate(const lang::Program& program, const EvalOptions& options = {});

// Parses then evaluates. Throws grammar::ParseFailure.
EvalResult EvaluateSource(std::string_view source, const EvalOptions& options = {});

// Names bound in the global scope before any program runs.
const std::vector<std::string>& BuiltinGlobalNames();

// String literals tested by the semantics' branch conditions, and the
// property keys the semantics looks up by name.
const std::vector<std::string>& ConditionStrings();
const std::vector<std::string>& SemanticPropertyKeys();

}  // namespace specdiff::spec

#endif  // SPECDIFF_SPEC_INTERPRETER_H_
