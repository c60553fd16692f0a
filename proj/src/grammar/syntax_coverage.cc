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


#include "grammar/syntax_coverage.h"

#include "grammar/parser.h"

namespace specdiff::grammar {

std::vector<AlternativeId> ReachableAlternatives(const Grammar& grammar) {
  std::set<std::string> reach = grammar.Reachable(grammar.start());
  std::vector<AlternativeId> out;
  for (const auto& r : grammar.rules()) {
    if (reach.count(r.lhs)) out.emplace_back(r.lhs, r.alt_index);
  }
  return out;
}

SyntaxCoverage SyntacticCoverage(const std::vector<std::string>& programs, const Grammar& grammar) {
  std::set<AlternativeId> used;
  for (const auto& p : programs) {
    NodePtr tree;
    try {
      tree = Parse(grammar, p);
    } catch (const ParseFailure& e) {
      throw ParseFailure(e.offset(), e.expected(), e.found() + " in program: " + p);
    }
    std::vector<AlternativeId> alts;
    CollectAlternatives(tree, alts);
    used.insert(alts.begin(), alts.end());
  }
  SyntaxCoverage cov;
  for (const auto& alt : ReachableAlternatives(grammar)) {
    ++cov.reachable;
    if (used.count(alt)) {
      ++cov.covered;
    } else {
      cov.uncovered.push_back(alt);
    }
  }
  return cov;
}

}  // namespace specdiff::grammar
