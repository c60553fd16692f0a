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

#ifndef SPECDIFF_GRAMMAR_RENDER_H_
#define SPECDIFF_GRAMMAR_RENDER_H_

#include <string>
#include <vector>

namespace specdiff::grammar {

// Joins token texts into one line of canonical source. Separators are only
// cosmetic: re-tokenizing the result always yields `tokens` again.
std::string RenderTokens(const std::vector<std::string>& tokens);

// Length metric used for shortest strings: characters of the tokens joined
// by single spaces.
size_t SpacedLength(const std::vector<std::string>& tokens);

}  // namespace specdiff::grammar

#endif  // SPECDIFF_GRAMMAR_RENDER_H_
