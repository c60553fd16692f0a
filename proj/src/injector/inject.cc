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


#include "injector/inject.h"

#include <cctype>
#include <cmath>
#include <map>

#include "grammar/grammar.h"
#include "grammar/lexer.h"
#include "lang/number.h"

namespace specdiff::injector {
namespace {

using spec::Value;
using spec::ValueKind;

bool IsIdentifierName(const std::string& s) {
  if (s.empty()) return false;
  auto start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; };
  if (!start(s[0])) return false;
  for (char c : s)
    if (!start(c) && !std::isdigit(static_cast<unsigned char>(c))) return false;
  return !grammar::Grammar::MiniLang().IsKeyword(s);
}

class Injector {
 public:
  explicit Injector(const spec::FinalState& state) : state_(state) {}

  std::vector<Assertion> Run() {
    for (const auto& [name, value] : state_.globals) Visit(name, value, nullptr);
    return std::move(out_);
  }

 private:
  void Emit(const std::string& kind, std::string source) {
    out_.push_back({kind, kind + "#" + std::to_string(++counters_[kind]), std::move(source)});
  }

  void ZeroProbe(const std::string& path, const Value& v) {
    if (v.kind != ValueKind::kNumber || v.number != 0) return;
    Emit("VarValue", "$assert.sameValue(1 / " + path + ", " +
                         (std::signbit(v.number) ? "-Infinity" : "Infinity") + ");");
  }

  // `slot` is the property holding `v`, or null for a global.
  void Visit(const std::string& path, const Value& v, const spec::PropertySlot* slot) {
    if (!v.IsObject()) {
      if (slot) {
        Emit("PropAttr", "$verifyProperty(" + ParentOf(path) + ", " +
                             grammar::EncodeStringLiteral(slot->key) + ", {value: " +
                             LiteralSource(v) + ", writable: " +
                             (slot->writable ? "true" : "false") + "});");
      } else {
        Emit("VarValue", "$assert.sameValue(" + path + ", " + LiteralSource(v) + ");");
      }
      ZeroProbe(path, v);
      return;
    }
    if (slot) {
      Emit("PropAttr", "$verifyProperty(" + ParentOf(path) + ", " +
                           grammar::EncodeStringLiteral(slot->key) +
                           ", {writable: " + (slot->writable ? "true" : "false") + "});");
    }
    auto seen = representative_.find(v.object);
    if (seen != representative_.end()) {
      Emit("ObjValue", "$assert.sameValue(" + path + ", " + seen->second + ");");
      return;
    }
    representative_[v.object] = path;
    const spec::HeapObject& obj = state_.heap[v.object];
    if (obj.callable) Emit("Callable", "$assert.callable(" + path + ");");
    std::string key_list;
    for (const auto& p : obj.properties) {
      if (!key_list.empty()) key_list += ", ";
      key_list += grammar::EncodeStringLiteral(p.key);
    }
    Emit("KeyOrder", "$assert.compareArray(keys(" + path + "), [" + key_list + "]);");
    for (const auto& p : obj.properties) {
      std::string child = MemberPath(path, p.key);
      parents_[child] = path;
      Visit(child, p.value, &p);
    }
  }

  std::string ParentOf(const std::string& path) const { return parents_.at(path); }

  const spec::FinalState& state_;
  std::map<int, std::string> representative_;
  std::map<std::string, std::string> parents_;
  std::map<std::string, int> counters_;
  std::vector<Assertion> out_;
};

}  // namespace

std::string LiteralSource(const Value& v) {
  switch (v.kind) {
    case ValueKind::kUndefined: return "undefined";
    case ValueKind::kNull: return "null";
    case ValueKind::kBoolean: return v.boolean ? "true" : "false";
    case ValueKind::kString: return grammar::EncodeStringLiteral(v.string);
    case ValueKind::kNumber:
      if (v.number == 0 && std::signbit(v.number)) return "-0";
      return lang::NumberToString(v.number);
    case ValueKind::kObject: break;
  }
  return "undefined";
}

std::string MemberPath(const std::string& base, const std::string& key) {
  if (IsIdentifierName(key)) return base + "." + key;
  return base + "[" + grammar::EncodeStringLiteral(key) + "]";
}

ConformanceTest Inject(const std::string& body, const spec::FinalState& state) {
  ConformanceTest test;
  test.tag = spec::TagOf(state);
  test.body = body;
  if (state.termination == spec::Termination::kNormal && state.builtins_intact)
    test.assertions = Injector(state).Run();
  return test;
}

}  // namespace specdiff::injector
