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


#include "grammar/shortest.h"

#include <deque>

#include "grammar/render.h"

namespace specdiff::grammar {

const TokenString& ShortestStringMap::Tokens(const std::string& nonterminal) const {
  auto it = entries_.find(nonterminal);
  if (it == entries_.end()) throw GrammarError("no shortest string for '" + nonterminal + "'");
  return it->second;
}

std::string ShortestStringMap::Text(const std::string& nonterminal) const {
  return RenderTokens(Tokens(nonterminal));
}

ShortestStringMap ShortestStrings(const Grammar& grammar) {
  ShortestStringMap m;
  const auto& rules = grammar.rules();
  std::deque<int> work;
  for (size_t i = 0; i < rules.size(); ++i) work.push_back(static_cast<int>(i));

  auto update = [&](const ReductionRule& rule) {
    TokenString str;
    for (const Symbol& s : rule.alternative) {
      switch (s.kind) {
        case SymbolKind::kTerminal:
          str.push_back(s.text);
          break;
        case SymbolKind::kLexical:
          str.push_back(grammar.LexicalDefault(s.text));
          break;
        case SymbolKind::kNonterminal: {
          auto it = m.entries_.find(s.text);
          if (it == m.entries_.end()) return false;
          str.insert(str.end(), it->second.begin(), it->second.end());
          break;
        }
      }
    }
    auto cur = m.entries_.find(rule.lhs);
    if (cur != m.entries_.end() && SpacedLength(str) >= SpacedLength(cur->second)) return false;
    m.entries_[rule.lhs] = std::move(str);
    ++m.updates_;
    return true;
  };

  while (!work.empty()) {
    const ReductionRule& rule = rules[work.front()];
    work.pop_front();
    if (!update(rule)) continue;
    for (size_t i = 0; i < rules.size(); ++i) {
      if (rules[i].Mentions(rule.lhs)) work.push_back(static_cast<int>(i));
    }
  }

  std::vector<std::string> missing;
  for (const auto& nt : grammar.nonterminals()) {
    if (!m.Has(nt)) missing.push_back(nt);
  }
  if (!missing.empty()) throw NonProductiveGrammar(missing);
  return m;
}

}  // namespace specdiff::grammar
