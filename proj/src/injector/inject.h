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


// Turns a program and its reference final state into a conformance test.

#ifndef SPECDIFF_INJECTOR_INJECT_H_
#define SPECDIFF_INJECTOR_INJECT_H_

#include <string>

#include "injector/conformance_test.h"
#include "spec/state.h"

namespace specdiff::injector {

// Tag from the termination. Normal runs also get assertions over every
// program global and everything reachable from it; other tags get none.
ConformanceTest Inject(const std::string& body, const spec::FinalState& state);

// Source text evaluating to a primitive value, e.g. `-0`, `"a\"b"`, `NaN`.
std::string LiteralSource(const spec::Value& v);

// `base.key` when key is an identifier, otherwise `base["key"]`.
std::string MemberPath(const std::string& base, const std::string& key);

}  // namespace specdiff::injector

#endif  // SPECDIFF_INJECTOR_INJECT_H_
