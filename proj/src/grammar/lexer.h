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

#ifndef SPECDIFF_GRAMMAR_LEXER_H_
#define SPECDIFF_GRAMMAR_LEXER_H_

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grammar/grammar.h"

namespace specdiff::grammar {

// Source position plus the set of tokens that would have been accepted.
class ParseFailure : public std::runtime_error {
 public:
  ParseFailure(size_t offset, std::set<std::string> expected, std::string found);

  size_t offset() const { return offset_; }
  const std::set<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  size_t offset_;
  std::set<std::string> expected_;
  std::string found_;
};

enum class TokenKind { kPunct, kKeyword, kIdent, kNumber, kString, kEnd };

struct Token {
  TokenKind kind;
  std::string text;
  size_t offset = 0;
  int line = 1;
};

// Grammar-driven tokenizer: punctuators and keywords come from the grammar's
// terminal set. `//` comments and whitespace are skipped.
std::vector<Token> Tokenize(const Grammar& grammar, std::string_view source);

// Lexical category a token belongs to, or empty for literal terminals.
std::string_view CategoryOf(TokenKind kind);

// Decodes the body of a double-quoted string literal token.
std::string DecodeStringLiteral(std::string_view token);
// Produces a double-quoted literal that decodes back to `value`.
std::string EncodeStringLiteral(std::string_view value);

}  // namespace specdiff::grammar

#endif  // SPECDIFF_GRAMMAR_LEXER_H_
