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


#ifndef SPECDIFF_GRAMMAR_SYNTHESIZE_H_
#define SPECDIFF_GRAMMAR_SYNTHESIZE_H_

#include <string>
#include <vector>

#include "grammar/grammar.h"
#include "grammar/shortest.h"

namespace specdiff::grammar {

// Strings derivable from `start` without recursive expansion. The first
// visit of a non-terminal on a derivation path expands every alternative;
// later visits on the same path contribute only the shortest string. Each
// alternative combines its children's string lists point-wise, padding
// shorter lists with that child's shortest string.
//
// Results are rendered source strings in first-generated order, without
// duplicates.
std::vector<std::string> NonRecursiveSynthesize(const Grammar& grammar, const std::string& start);
std::vector<std::string> NonRecursiveSynthesize(const Grammar& grammar, const std::string& start,
                                                const ShortestStringMap& shortest);
// Same, as token strings.
std::vector<TokenString> NonRecursiveSynthesizeTokens(const Grammar& grammar,
                                                      const std::string& start,
                                                      const ShortestStringMap& shortest);

enum class ReceiverKind { kNone, kObject, kArray };

struct BuiltinSignature {
  std::string name;
  ReceiverKind receiver = ReceiverKind::kNone;
  int required_params = 0;
  int optional_params = 0;
  bool variadic = false;
  bool constructor_style = false;

  // Throws GrammarError when counts are negative or a variadic signature
  // declares optional parameters.
  void Validate() const;
};

// Call programs for one builtin: arities required..required+optional (0, 1
// and 2 for variadic ones). Receiver-style builtins take the receiver as the
// first argument and are emitted once with a canonical receiver and once
// with null. Arguments are the shortest AssignmentExpression string.
std::vector<std::string> SynthesizeBuiltinCalls(const BuiltinSignature& sig,
                                                const ShortestStringMap& shortest);

// The builtins available to MiniLang programs.
const std::vector<BuiltinSignature>& MiniLangBuiltins();

// Seed corpus: non-recursive programs followed by the builtin calls.
std::vector<std::string> MiniLangSeeds();

}  // namespace specdiff::grammar

#endif  // SPECDIFF_GRAMMAR_SYNTHESIZE_H_
