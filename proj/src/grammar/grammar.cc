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

#include "grammar/grammar.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace specdiff::grammar {
namespace {

constexpr std::string_view kMiniLang = R"grammar(# MiniLang
%start Program
%lex ident x
%lex number 0
%lex string ""

Program ::= StatementList
StatementList ::= StatementList Statement | %empty
Statement ::= VariableStatement | ExpressionStatement | IfStatement | WhileStatement | Block | FunctionDeclaration | ReturnStatement | ThrowStatement | BreakStatement | TryStatement
VariableStatement ::= "var" VariableDeclarationList ";"
VariableDeclarationList ::= VariableDeclaration | VariableDeclarationList "," VariableDeclaration
VariableDeclaration ::= <ident> | <ident> Initializer
Initializer ::= "=" AssignmentExpression
ExpressionStatement ::= Expression ";"
IfStatement ::= "if" "(" Expression ")" Statement | "if" "(" Expression ")" Statement "else" Statement
WhileStatement ::= "while" "(" Expression ")" Statement
Block ::= "{" StatementList "}"
FunctionDeclaration ::= "function" <ident> "(" FormalParameters ")" "{" FunctionBody "}"
FunctionExpression ::= "function" "(" FormalParameters ")" "{" FunctionBody "}" | "function" <ident> "(" FormalParameters ")" "{" FunctionBody "}"
FunctionBody ::= StatementList
FormalParameters ::= %empty | FormalParameterList
FormalParameterList ::= FormalParameter | FormalParameterList "," FormalParameter
FormalParameter ::= <ident> | <ident> Initializer
ReturnStatement ::= "return" ";" | "return" Expression ";"
ThrowStatement ::= "throw" Expression ";"
BreakStatement ::= "break" ";"
TryStatement ::= "try" Block "catch" "(" <ident> ")" Block
Expression ::= AssignmentExpression
AssignmentExpression ::= EqualityExpression | LeftHandSideExpression "=" AssignmentExpression
EqualityExpression ::= RelationalExpression | EqualityExpression "==" RelationalExpression | EqualityExpression "===" RelationalExpression
RelationalExpression ::= AdditiveExpression | RelationalExpression "<" AdditiveExpression
AdditiveExpression ::= MultiplicativeExpression | AdditiveExpression "+" MultiplicativeExpression | AdditiveExpression "-" MultiplicativeExpression
MultiplicativeExpression ::= UnaryExpression | MultiplicativeExpression "*" UnaryExpression | MultiplicativeExpression "/" UnaryExpression
UnaryExpression ::= UpdateExpression | "-" UnaryExpression | "!" UnaryExpression
UpdateExpression ::= LeftHandSideExpression | LeftHandSideExpression "++" | LeftHandSideExpression "--" | "++" UnaryExpression | "--" UnaryExpression
LeftHandSideExpression ::= MemberExpression | CallExpression
MemberExpression ::= PrimaryExpression | MemberExpression "[" Expression "]" | MemberExpression "." <ident>
CallExpression ::= MemberExpression Arguments | CallExpression Arguments | CallExpression "[" Expression "]" | CallExpression "." <ident>
Arguments ::= "(" ")" | "(" ArgumentList ")"
ArgumentList ::= AssignmentExpression | ArgumentList "," AssignmentExpression
PrimaryExpression ::= <number> | <ident> | <string> | "true" | "false" | "null" | "undefined" | ObjectLiteral | ArrayLiteral | FunctionExpression | "(" Expression ")"
ObjectLiteral ::= "{" "}" | "{" PropertyDefinitionList "}"
PropertyDefinitionList ::= PropertyDefinition | PropertyDefinitionList "," PropertyDefinition
PropertyDefinition ::= PropertyName ":" AssignmentExpression
PropertyName ::= <ident> | <string> | <number> | "[" AssignmentExpression "]"
ArrayLiteral ::= "[" "]" | "[" ElementList "]"
ElementList ::= AssignmentExpression | ElementList "," AssignmentExpression
)grammar";

bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Splits one alternative into symbols.
std::vector<Symbol> ParseAlternative(std::string_view text, int line_no) {
  std::vector<Symbol> out;
  size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw GrammarError("line " + std::to_string(line_no) + ": " + what);
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '"') {
      size_t j = text.find('"', i + 1);
      if (j == std::string_view::npos) fail("unterminated terminal");
      if (j == i + 1) fail("empty terminal");
      out.push_back({SymbolKind::kTerminal, std::string(text.substr(i + 1, j - i - 1))});
      i = j + 1;
    } else if (c == '<') {
      size_t j = text.find('>', i + 1);
      if (j == std::string_view::npos) fail("unterminated lexical category");
      out.push_back({SymbolKind::kLexical, std::string(text.substr(i + 1, j - i - 1))});
      i = j + 1;
    } else if (text.substr(i, 6) == "%empty") {
      i += 6;
    } else if (IsWordChar(c)) {
      size_t j = i;
      while (j < text.size() && IsWordChar(text[j])) ++j;
      out.push_back({SymbolKind::kNonterminal, std::string(text.substr(i, j - i))});
      i = j;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

// Splits on '|' outside quotes.
std::vector<std::string_view> SplitAlternatives(std::string_view rhs) {
  std::vector<std::string_view> parts;
  bool quoted = false;
  size_t begin = 0;
  for (size_t i = 0; i < rhs.size(); ++i) {
    if (rhs[i] == '"') quoted = !quoted;
    if (rhs[i] == '|' && !quoted) {
      parts.push_back(rhs.substr(begin, i - begin));
      begin = i + 1;
    }
  }
  parts.push_back(rhs.substr(begin));
  return parts;
}

std::string JoinNames(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

NonProductiveGrammar::NonProductiveGrammar(std::vector<std::string> nonterminals)
    : GrammarError("non-productive non-terminals: " + JoinNames(nonterminals)),
      nonterminals_(std::move(nonterminals)) {}

bool ReductionRule::Mentions(std::string_view nonterminal) const {
  return std::any_of(alternative.begin(), alternative.end(), [&](const Symbol& s) {
    return s.kind == SymbolKind::kNonterminal && s.text == nonterminal;
  });
}

Grammar Grammar::FromText(std::string_view text) {
  Grammar g;
  g.lexical_defaults_ = {{std::string(kIdentCategory), "x"},
                         {std::string(kNumberCategory), "0"},
                         {std::string(kStringCategory), "\"\""}};
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::map<std::string, int> next_alt;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    if (trimmed.rfind("%start", 0) == 0) {
      g.start_ = Trim(std::string_view(trimmed).substr(6));
      continue;
    }
    if (trimmed.rfind("%lex", 0) == 0) {
      std::string rest = Trim(std::string_view(trimmed).substr(4));
      size_t sp = rest.find_first_of(" \t");
      if (sp == std::string::npos) {
        throw GrammarError("line " + std::to_string(line_no) + ": %lex needs a default");
      }
      g.lexical_defaults_[rest.substr(0, sp)] = Trim(std::string_view(rest).substr(sp));
      continue;
    }
    size_t arrow = trimmed.find("::=");
    if (arrow == std::string::npos) {
      throw GrammarError("line " + std::to_string(line_no) + ": expected '::='");
    }
    std::string lhs = Trim(std::string_view(trimmed).substr(0, arrow));
    if (lhs.empty() || !std::all_of(lhs.begin(), lhs.end(), IsWordChar)) {
      throw GrammarError("line " + std::to_string(line_no) + ": bad non-terminal name");
    }
    for (std::string_view alt : SplitAlternatives(std::string_view(trimmed).substr(arrow + 3))) {
      ReductionRule rule;
      rule.lhs = lhs;
      rule.alternative = ParseAlternative(alt, line_no);
      rule.alt_index = next_alt[lhs]++;
      g.rules_.push_back(std::move(rule));
    }
  }
  if (g.rules_.empty()) throw GrammarError("grammar has no rules");
  if (g.start_.empty()) g.start_ = g.rules_.front().lhs;
  g.Index();
  g.CheckDeclarations();
  g.CheckProductive();
  return g;
}

Grammar Grammar::Unchecked(std::string start, std::vector<ReductionRule> rules,
                           std::map<std::string, std::string> lexical_defaults) {
  Grammar g;
  g.start_ = std::move(start);
  g.rules_ = std::move(rules);
  g.lexical_defaults_ = std::move(lexical_defaults);
  g.Index();
  g.CheckDeclarations();
  return g;
}

const Grammar& Grammar::MiniLang() {
  static const Grammar* grammar = new Grammar(FromText(kMiniLang));
  return *grammar;
}

std::string_view Grammar::MiniLangText() { return kMiniLang; }

void Grammar::Index() {
  nonterminals_.clear();
  nt_index_.clear();
  rules_for_.clear();
  terminals_.clear();
  keywords_.clear();
  for (size_t i = 0; i < rules_.size(); ++i) {
    const ReductionRule& r = rules_[i];
    auto [it, inserted] = nt_index_.emplace(r.lhs, static_cast<int>(nonterminals_.size()));
    if (inserted) {
      nonterminals_.push_back(r.lhs);
      rules_for_.emplace_back();
    }
    rules_for_[it->second].push_back(static_cast<int>(i));
    for (const Symbol& s : r.alternative) {
      if (s.kind == SymbolKind::kTerminal) terminals_.insert(s.text);
    }
  }
  punctuators_.clear();
  for (const std::string& t : terminals_) {
    if (IsWordChar(t[0])) {
      keywords_.insert(t);
    } else {
      punctuators_.push_back(t);
    }
  }
  std::stable_sort(punctuators_.begin(), punctuators_.end(),
                   [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
  categories_ = {std::string(kIdentCategory), std::string(kNumberCategory),
                 std::string(kStringCategory)};
  for (const auto& r : rules_) {
    for (const Symbol& s : r.alternative) {
      if (s.kind == SymbolKind::kLexical &&
          std::find(categories_.begin(), categories_.end(), s.text) == categories_.end()) {
        categories_.push_back(s.text);
      }
    }
  }
  symbol_nt_.clear();
  for (const auto& r : rules_) {
    std::vector<int> ids;
    for (const Symbol& s : r.alternative) {
      ids.push_back(s.kind == SymbolKind::kNonterminal ? NonterminalIndex(s.text) : -1);
    }
    symbol_nt_.push_back(std::move(ids));
  }
  ComputeFirstSets();
}

void Grammar::ComputeFirstSets() {
  const size_t width = terminals_.size() + categories_.size() + 1;
  const size_t nullable = width - 1;
  first_nt_.assign(nonterminals_.size(), std::vector<bool>(width, false));
  first_rule_.assign(rules_.size(), std::vector<bool>(width, false));
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t ri = 0; ri < rules_.size(); ++ri) {
      std::vector<bool>& f = first_rule_[ri];
      bool all_nullable = true;
      for (const Symbol& s : rules_[ri].alternative) {
        if (s.kind == SymbolKind::kNonterminal) {
          int nt = NonterminalIndex(s.text);
          if (nt < 0) {
            all_nullable = false;
            break;
          }
          for (size_t c = 0; c < nullable; ++c) {
            if (first_nt_[nt][c] && !f[c]) f[c] = changed = true;
          }
          if (!first_nt_[nt][nullable]) {
            all_nullable = false;
            break;
          }
        } else {
          int c = s.kind == SymbolKind::kTerminal ? TerminalClass(s.text) : CategoryClass(s.text);
          if (c >= 0 && !f[c]) f[c] = changed = true;
          all_nullable = false;
          break;
        }
      }
      if (all_nullable && !f[nullable]) f[nullable] = changed = true;
      std::vector<bool>& g = first_nt_[nt_index_.find(rules_[ri].lhs)->second];
      for (size_t c = 0; c < width; ++c) {
        if (f[c] && !g[c]) g[c] = changed = true;
      }
    }
  }
}

int Grammar::TerminalClass(std::string_view terminal) const {
  auto it = terminals_.find(std::string(terminal));
  return it == terminals_.end() ? -1 : static_cast<int>(std::distance(terminals_.begin(), it));
}

int Grammar::CategoryClass(std::string_view category) const {
  auto it = std::find(categories_.begin(), categories_.end(), category);
  if (it == categories_.end()) return -1;
  return static_cast<int>(terminals_.size() + (it - categories_.begin()));
}

bool Grammar::CanStart(int nonterminal, int token_class) const {
  const auto& f = first_nt_[nonterminal];
  return f.back() || (token_class >= 0 && f[token_class]);
}

bool Grammar::RuleCanStart(int rule, int token_class) const {
  const auto& f = first_rule_[rule];
  return f.back() || (token_class >= 0 && f[token_class]);
}

void Grammar::CheckDeclarations() const {
  if (!IsNonterminal(start_)) throw GrammarError("start symbol '" + start_ + "' is not declared");
  std::set<std::pair<std::string, int>> seen;
  for (const ReductionRule& r : rules_) {
    if (!seen.emplace(r.lhs, r.alt_index).second) {
      throw GrammarError("duplicate alternative index for " + r.lhs);
    }
    for (const Symbol& s : r.alternative) {
      if (s.kind == SymbolKind::kNonterminal && !IsNonterminal(s.text)) {
        throw GrammarError("undeclared non-terminal '" + s.text + "' in " + ToString(r));
      }
      if (s.kind == SymbolKind::kLexical && !lexical_defaults_.count(s.text)) {
        throw GrammarError("no lexical default for <" + s.text + ">");
      }
    }
  }
}

void Grammar::CheckProductive() const {
  std::set<std::string> productive;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const ReductionRule& r : rules_) {
      if (productive.count(r.lhs)) continue;
      bool ok = std::all_of(r.alternative.begin(), r.alternative.end(), [&](const Symbol& s) {
        return s.kind != SymbolKind::kNonterminal || productive.count(s.text);
      });
      if (ok) {
        productive.insert(r.lhs);
        changed = true;
      }
    }
  }
  std::vector<std::string> missing;
  for (const std::string& nt : nonterminals_) {
    if (!productive.count(nt)) missing.push_back(nt);
  }
  if (!missing.empty()) throw NonProductiveGrammar(std::move(missing));
}

bool Grammar::IsNonterminal(std::string_view name) const { return nt_index_.find(name) != nt_index_.end(); }

int Grammar::NonterminalIndex(std::string_view name) const {
  auto it = nt_index_.find(name);
  return it == nt_index_.end() ? -1 : it->second;
}

const std::vector<int>& Grammar::RulesFor(std::string_view nonterminal) const {
  int idx = NonterminalIndex(nonterminal);
  if (idx < 0) throw GrammarError("unknown non-terminal '" + std::string(nonterminal) + "'");
  return rules_for_[idx];
}

const std::string& Grammar::LexicalDefault(std::string_view category) const {
  auto it = lexical_defaults_.find(std::string(category));
  if (it == lexical_defaults_.end()) {
    throw GrammarError("no lexical default for <" + std::string(category) + ">");
  }
  return it->second;
}

bool Grammar::IsKeyword(std::string_view text) const { return keywords_.find(text) != keywords_.end(); }

std::set<std::string> Grammar::Reachable(std::string_view from) const {
  std::set<std::string> seen{std::string(from)};
  std::deque<std::string> work{std::string(from)};
  while (!work.empty()) {
    std::string nt = work.front();
    work.pop_front();
    for (int ri : RulesFor(nt)) {
      for (const Symbol& s : rules_[ri].alternative) {
        if (s.kind == SymbolKind::kNonterminal && seen.insert(s.text).second) work.push_back(s.text);
      }
    }
  }
  return seen;
}

std::string ToString(const ReductionRule& rule) {
  std::string out = rule.lhs + " ::=";
  if (rule.alternative.empty()) out += " %empty";
  for (const Symbol& s : rule.alternative) {
    switch (s.kind) {
      case SymbolKind::kTerminal: out += " \"" + s.text + "\""; break;
      case SymbolKind::kLexical: out += " <" + s.text + ">"; break;
      case SymbolKind::kNonterminal: out += " " + s.text; break;
    }
  }
  return out;
}

}  // namespace specdiff::grammar
