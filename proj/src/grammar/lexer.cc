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

#include "grammar/lexer.h"

#include <cctype>
#include <cstdio>

namespace specdiff::grammar {
namespace {

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool IsIdentPart(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool IsDigit(char c) { return c >= '0' && c <= '9'; }

std::string DescribeExpected(const std::set<std::string>& expected) {
  std::string out;
  for (const auto& e : expected) {
    if (!out.empty()) out += ", ";
    out += e;
  }
  return out;
}

}  // namespace

ParseFailure::ParseFailure(size_t offset, std::set<std::string> expected, std::string found)
    : std::runtime_error("parse failure at offset " + std::to_string(offset) + ": found '" +
                         found + "', expected one of {" + DescribeExpected(expected) + "}"),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

std::vector<Token> Tokenize(const Grammar& grammar, std::string_view src) {
  std::vector<Token> out;
  size_t i = 0;
  int line = 1;
  while (true) {
    while (i < src.size()) {
      if (src[i] == '\n') {
        ++line;
        ++i;
      } else if (std::isspace(static_cast<unsigned char>(src[i]))) {
        ++i;
      } else if (src.compare(i, 2, "//") == 0) {
        while (i < src.size() && src[i] != '\n') ++i;
      } else {
        break;
      }
    }
    if (i >= src.size()) break;
    Token tok;
    tok.offset = i;
    tok.line = line;
    char c = src[i];
    if (IsIdentStart(c)) {
      size_t j = i;
      while (j < src.size() && IsIdentPart(src[j])) ++j;
      tok.text = std::string(src.substr(i, j - i));
      tok.kind = grammar.IsKeyword(tok.text) ? TokenKind::kKeyword : TokenKind::kIdent;
      i = j;
    } else if (IsDigit(c)) {
      size_t j = i;
      while (j < src.size() && IsDigit(src[j])) ++j;
      if (j + 1 < src.size() && src[j] == '.' && IsDigit(src[j + 1])) {
        ++j;
        while (j < src.size() && IsDigit(src[j])) ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && IsDigit(src[k])) {
          while (k < src.size() && IsDigit(src[k])) ++k;
          j = k;
        }
      }
      if (j < src.size() && IsIdentPart(src[j])) {
        throw ParseFailure(j, {"number"}, std::string(1, src[j]));
      }
      tok.text = std::string(src.substr(i, j - i));
      tok.kind = TokenKind::kNumber;
      i = j;
    } else if (c == '"') {
      size_t j = i + 1;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') {
        j += (src[j] == '\\' && j + 1 < src.size()) ? 2 : 1;
      }
      if (j >= src.size() || src[j] != '"') throw ParseFailure(i, {"string"}, "\"");
      tok.text = std::string(src.substr(i, j + 1 - i));
      tok.kind = TokenKind::kString;
      i = j + 1;
    } else {
      bool matched = false;
      for (const std::string& p : grammar.punctuators()) {
        if (src.compare(i, p.size(), p) == 0) {
          tok.text = p;
          tok.kind = TokenKind::kPunct;
          i += p.size();
          matched = true;
          break;
        }
      }
      if (!matched) throw ParseFailure(i, {"token"}, std::string(1, c));
    }
    out.push_back(std::move(tok));
  }
  out.push_back(Token{TokenKind::kEnd, "", src.size(), line});
  return out;
}

std::string_view CategoryOf(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdent: return kIdentCategory;
    case TokenKind::kNumber: return kNumberCategory;
    case TokenKind::kString: return kStringCategory;
    default: return {};
  }
}

std::string DecodeStringLiteral(std::string_view token) {
  std::string out;
  if (token.size() < 2) return out;
  std::string_view body = token.substr(1, token.size() - 2);
  for (size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c != '\\' || i + 1 >= body.size()) {
      out += c;
      continue;
    }
    char e = body[++i];
    switch (e) {
      case 'n': out += '\n'; break;
      case 't': out += '\t'; break;
      case 'r': out += '\r'; break;
      case '0': out += '\0'; break;
      case 'x':
        if (i + 2 < body.size() && std::isxdigit(static_cast<unsigned char>(body[i + 1])) &&
            std::isxdigit(static_cast<unsigned char>(body[i + 2]))) {
          out += static_cast<char>(std::stoi(std::string(body.substr(i + 1, 2)), nullptr, 16));
          i += 2;
        } else {
          out += e;
        }
        break;
      default: out += e; break;
    }
  }
  return out;
}

std::string EncodeStringLiteral(std::string_view value) {
  std::string out = "\"";
  for (char c : value) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      case '\0': out += "\\0"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\x%02x", static_cast<unsigned char>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

}  // namespace specdiff::grammar
