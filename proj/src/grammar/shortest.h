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


#ifndef SPECDIFF_GRAMMAR_SHORTEST_H_
#define SPECDIFF_GRAMMAR_SHORTEST_H_

#include <map>
#include <string>
#include <vector>

#include "grammar/grammar.h"

namespace specdiff::grammar {

using TokenString = std::vector<std::string>;

// Shortest token string derivable from each non-terminal.
class ShortestStringMap {
 public:
  bool Has(const std::string& nonterminal) const { return entries_.count(nonterminal) > 0; }
  const TokenString& Tokens(const std::string& nonterminal) const;
  // Rendered form, e.g. "()" or "x".
  std::string Text(const std::string& nonterminal) const;
  const std::map<std::string, TokenString>& entries() const { return entries_; }

  // Number of successful updates performed while computing the map.
  int updates() const { return updates_; }

 private:
  friend ShortestStringMap ShortestStrings(const Grammar& grammar);
  std::map<std::string, TokenString> entries_;
  int updates_ = 0;
};

// Worklist fixpoint: every rule starts on a FIFO queue; a rule that yields a
// strictly shorter string for its left-hand side re-enqueues every rule that
// mentions it. Lexical categories use the grammar's defaults. Throws
// NonProductiveGrammar if some non-terminal never gets an entry.
ShortestStringMap ShortestStrings(const Grammar& grammar);

}  // namespace specdiff::grammar

#endif  // SPECDIFF_GRAMMAR_SHORTEST_H_
