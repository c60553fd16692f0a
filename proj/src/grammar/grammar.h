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

// Context-free grammar representation shared by the seed synthesizer, the
// generic parser and the mutator.
//
// Text format, one production per line:
//
//   %start Program
//   %lex ident x
//   Program ::= StatementList
//   StatementList ::= StatementList Statement | %empty
//   PrimaryExpression ::= <number> | <ident> | "(" Expression ")"
//
// Terminals are double-quoted, lexical categories are written <name> and
// take their rendering from the %lex defaults, %empty marks an epsilon
// alternative and '#' starts a comment line.

#ifndef SPECDIFF_GRAMMAR_GRAMMAR_H_
#define SPECDIFF_GRAMMAR_GRAMMAR_H_

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace specdiff::grammar {

class GrammarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when some non-terminal derives no terminal string.
class NonProductiveGrammar : public GrammarError {
 public:
  explicit NonProductiveGrammar(std::vector<std::string> nonterminals);
  const std::vector<std::string>& nonterminals() const { return nonterminals_; }

 private:
  std::vector<std::string> nonterminals_;
};

enum class SymbolKind { kTerminal, kNonterminal, kLexical };

struct Symbol {
  SymbolKind kind;
  // Literal token text, non-terminal name, or lexical category name.
  std::string text;

  bool operator==(const Symbol&) const = default;
};

struct ReductionRule {
  std::string lhs;
  std::vector<Symbol> alternative;  // empty == epsilon
  int alt_index = 0;

  bool Mentions(std::string_view nonterminal) const;
};

// Lexical categories understood by the lexer.
inline constexpr std::string_view kIdentCategory = "ident";
inline constexpr std::string_view kNumberCategory = "number";
inline constexpr std::string_view kStringCategory = "string";

class Grammar {
 public:
  // Parses and fully validates a grammar in the text format above.
  static Grammar FromText(std::string_view text);

  // Builds a grammar without the productivity check. Declaration checks
  // still apply.
  static Grammar Unchecked(std::string start, std::vector<ReductionRule> rules,
                           std::map<std::string, std::string> lexical_defaults);

  // The shipped MiniLang grammar.
  static const Grammar& MiniLang();
  static std::string_view MiniLangText();

  const std::string& start() const { return start_; }
  const std::vector<ReductionRule>& rules() const { return rules_; }
  // Non-terminals in order of first definition.
  const std::vector<std::string>& nonterminals() const { return nonterminals_; }
  const std::set<std::string>& terminals() const { return terminals_; }
  const std::map<std::string, std::string>& lexical_defaults() const {
    return lexical_defaults_;
  }

  bool IsNonterminal(std::string_view name) const;
  int NonterminalIndex(std::string_view name) const;  // -1 if unknown
  // Indices into rules() for one non-terminal, in alternative order.
  const std::vector<int>& RulesFor(std::string_view nonterminal) const;
  const std::string& LexicalDefault(std::string_view category) const;

  // Keywords are the word-like terminals; the lexer treats them as reserved.
  bool IsKeyword(std::string_view text) const;
  const std::vector<std::string>& punctuators() const { return punctuators_; }

  // Non-terminals reachable from `from` via the rule graph (including it).
  std::set<std::string> Reachable(std::string_view from) const;

  // Token classes for lookahead: terminals in sorted order, then the lexical
  // categories. -1 when unknown.
  int TerminalClass(std::string_view terminal) const;
  int CategoryClass(std::string_view category) const;
  size_t token_class_count() const { return terminals_.size() + categories_.size(); }
  // True if some derivation of the non-terminal (or rule) can begin with a
  // token of that class, or derives the empty string.
  bool CanStart(int nonterminal, int token_class) const;
  bool RuleCanStart(int rule, int token_class) const;
  // Rules of the non-terminal with that index.
  const std::vector<int>& RulesForIndex(int nonterminal) const { return rules_for_[nonterminal]; }
  // Per symbol of a rule: the non-terminal index, or -1.
  const std::vector<int>& RuleSymbolIndices(int rule) const { return symbol_nt_[rule]; }

 private:
  Grammar() = default;
  void Index();
  void ComputeFirstSets();
  void CheckDeclarations() const;
  void CheckProductive() const;

  std::string start_;
  std::vector<ReductionRule> rules_;
  std::map<std::string, std::string> lexical_defaults_;
  std::vector<std::string> nonterminals_;
  std::map<std::string, int, std::less<>> nt_index_;
  std::vector<std::vector<int>> rules_for_;
  std::set<std::string> terminals_;
  std::set<std::string, std::less<>> keywords_;
  std::vector<std::string> punctuators_;  // longest first
  std::vector<std::string> categories_;
  // Per non-terminal / rule: start-token classes, with one extra trailing
  // slot marking nullability.
  std::vector<std::vector<bool>> first_nt_;
  std::vector<std::vector<bool>> first_rule_;
  std::vector<std::vector<int>> symbol_nt_;
};

std::string ToString(const ReductionRule& rule);

}  // namespace specdiff::grammar

#endif  // SPECDIFF_GRAMMAR_GRAMMAR_H_
