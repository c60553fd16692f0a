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


#ifndef SPECDIFF_GRAMMAR_SYNTAX_COVERAGE_H_
#define SPECDIFF_GRAMMAR_SYNTAX_COVERAGE_H_

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grammar/grammar.h"

namespace specdiff::grammar {

using AlternativeId = std::pair<std::string, int>;  // (production, alt_index)

struct SyntaxCoverage {
  size_t covered = 0;
  size_t reachable = 0;
  std::vector<AlternativeId> uncovered;  // in rule order

  double ratio() const { return reachable == 0 ? 0.0 : static_cast<double>(covered) / reachable; }
};

// Alternatives reachable from the start symbol.
std::vector<AlternativeId> ReachableAlternatives(const Grammar& grammar);

// Fraction of reachable alternatives used by the parse trees of `programs`.
// Throws ParseFailure (with the offending program in the message) when one
// of them does not parse.
SyntaxCoverage SyntacticCoverage(const std::vector<std::string>& programs, const Grammar& grammar);

}  // namespace specdiff::grammar

#endif  // SPECDIFF_GRAMMAR_SYNTAX_COVERAGE_H_
