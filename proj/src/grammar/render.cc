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

#include "grammar/render.h"

#include <cctype>
#include <set>
#include <string_view>

namespace specdiff::grammar {
namespace {

bool IsWordLike(std::string_view t) {
  if (t.empty()) return false;
  unsigned char c = static_cast<unsigned char>(t[0]);
  return std::isalnum(c) || c == '_' || c == '$';
}

bool IsStatementKeyword(std::string_view t) {
  static const std::set<std::string_view> kWords = {
      "var", "if", "else", "while", "return", "throw", "break", "try",
      "catch", "function", "new", "typeof", "do", "for", "in", "of"};
  return kWords.count(t) > 0;
}

bool IsOperatorChar(char c) { return std::string_view("+-=<>!*/&|.%^~?").find(c) != std::string_view::npos; }

// Two punctuators could lex as something else when glued together.
bool MayMerge(std::string_view prev, std::string_view next) {
  if (prev.empty() || next.empty()) return false;
  if (IsWordLike(prev) || IsWordLike(next)) return false;
  if (prev[0] == '"' || next[0] == '"') return false;
  return IsOperatorChar(prev.back()) && IsOperatorChar(next.front());
}

}  // namespace

size_t SpacedLength(const std::vector<std::string>& tokens) {
  size_t n = 0;
  for (const auto& t : tokens) n += t.size();
  if (tokens.size() > 1) n += tokens.size() - 1;
  return n;
}

std::string RenderTokens(const std::vector<std::string>& tok) {
  const size_t n = tok.size();
  std::vector<bool> tight_brace(n, false);  // object-literal style braces
  std::vector<bool> operand_end(n, false);
  std::vector<bool> prefix_op(n, false);
  std::vector<size_t> open;
  for (size_t i = 0; i < n; ++i) {
    const std::string& t = tok[i];
    bool prev_operand = i > 0 && operand_end[i - 1];
    if (t == "{") {
      bool tight = i + 1 < n && (tok[i + 1] == "}" ||
                                 (i + 2 < n && tok[i + 2] == ":" &&
                                  (IsWordLike(tok[i + 1]) || tok[i + 1][0] == '"')));
      tight_brace[i] = tight;
      open.push_back(i);
    } else if (t == "}") {
      if (!open.empty()) {
        tight_brace[i] = tight_brace[open.back()];
        open.pop_back();
      }
      operand_end[i] = tight_brace[i];
    } else if (t == "-" || t == "!" || t == "++" || t == "--") {
      if (!prev_operand) {
        prefix_op[i] = true;
      } else if (t == "++" || t == "--") {
        operand_end[i] = true;  // postfix
      }
    } else if (IsWordLike(t)) {
      operand_end[i] = !IsStatementKeyword(t);
    } else if (t[0] == '"' || t == ")" || t == "]") {
      operand_end[i] = true;
    }
  }

  auto needs_space = [&](size_t i) -> bool {
    const std::string& p = tok[i - 1];
    const std::string& t = tok[i];
    if ((IsWordLike(p) || p[0] == '"') && (IsWordLike(t) || t[0] == '"')) return true;
    if (MayMerge(p, t)) return true;
    if (t == ")" || t == "]" || t == "," || t == ";" || t == ":" || t == ".") return false;
    if (p == "(" || p == "[" || p == "." || p == "...") return false;
    if (prefix_op[i - 1]) return false;
    if ((t == "++" || t == "--") && operand_end[i]) return false;
    if (t == "(") {
      if (IsWordLike(p)) return IsStatementKeyword(p) && p != "function";
      return !operand_end[i - 1];
    }
    if (t == "[") return !operand_end[i - 1];
    if (p == "{") return !(tight_brace[i - 1] || t == "}");
    if (t == "}") return !tight_brace[i];
    return true;
  };

  std::string out;
  for (size_t i = 0; i < n; ++i) {
    if (i > 0 && needs_space(i)) out += ' ';
    out += tok[i];
  }
  return out;
}

}  // namespace specdiff::grammar
