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


// MiniEngine: a direct tree-walking MiniLang interpreter written separately
// from the reference semantics. Bugs from an EngineBugCatalog can be
// switched on to model faulty implementations.

#ifndef SPECDIFF_ENGINES_MINI_ENGINE_H_
#define SPECDIFF_ENGINES_MINI_ENGINE_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "engines/engine_bugs.h"
#include "lang/ast.h"

namespace specdiff::engines {

struct ExecLimits {
  int64_t max_steps = 5000000;
  int max_call_depth = 200;
};

struct ExecOutcome {
  enum class Kind { kNormal, kThrow, kError, kAbort, kResourceLimit };
  Kind kind = Kind::kNormal;
  std::string error_name;  // kError
  std::string detail;      // thrown value, error text, abort reason
  // Line of the failing assertion helper call when error_name is
  // "AssertionError".
  int failed_assertion_line = 0;
};

ExecOutcome RunMiniEngine(const lang::Program& program, const EngineBugCatalog& bugs,
                          const ExecLimits& limits = {});

// Unparseable source ends in a SyntaxError.
ExecOutcome RunMiniEngineSource(std::string_view source, const EngineBugCatalog& bugs,
                                const ExecLimits& limits = {});

}  // namespace specdiff::engines

#endif  // SPECDIFF_ENGINES_MINI_ENGINE_H_
