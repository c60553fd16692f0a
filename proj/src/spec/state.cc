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


#include "spec/state.h"

#include <cmath>

#include "grammar/lexer.h"
#include "lang/number.h"

namespace specdiff::spec {

bool SameValue(const Value& a, const Value& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ValueKind::kUndefined:
    case ValueKind::kNull: return true;
    case ValueKind::kBoolean: return a.boolean == b.boolean;
    case ValueKind::kNumber:
      if (std::isnan(a.number) && std::isnan(b.number)) return true;
      if (a.number == 0 && b.number == 0) return std::signbit(a.number) == std::signbit(b.number);
      return a.number == b.number;
    case ValueKind::kString: return a.string == b.string;
    case ValueKind::kObject: return a.object == b.object;
  }
  return false;
}

std::string Describe(const Value& v) {
  switch (v.kind) {
    case ValueKind::kUndefined: return "undefined";
    case ValueKind::kNull: return "null";
    case ValueKind::kBoolean: return v.boolean ? "true" : "false";
    case ValueKind::kNumber:
      if (v.number == 0 && std::signbit(v.number)) return "-0";
      return lang::NumberToString(v.number);
    case ValueKind::kString: return grammar::EncodeStringLiteral(v.string);
    case ValueKind::kObject: return "#" + std::to_string(v.object);
  }
  return "?";
}

const PropertySlot* HeapObject::Find(const std::string& key) const {
  for (const auto& p : properties) {
    if (p.key == key) return &p;
  }
  return nullptr;
}

PropertySlot* HeapObject::Find(const std::string& key) {
  for (auto& p : properties) {
    if (p.key == key) return &p;
  }
  return nullptr;
}

std::string TagOf(const FinalState& state) {
  switch (state.termination) {
    case Termination::kNormal: return "Normal";
    case Termination::kThrow: return "Throw";
    case Termination::kNamedError: return state.error_name;
    case Termination::kAbort: return "Abort";
  }
  return "Normal";
}

nlohmann::json ToJson(const Value& v) {
  using nlohmann::json;
  switch (v.kind) {
    case ValueKind::kUndefined: return json{{"type", "undefined"}};
    case ValueKind::kNull: return json{{"type", "null"}};
    case ValueKind::kBoolean: return json{{"type", "boolean"}, {"value", v.boolean}};
    case ValueKind::kNumber: return json{{"type", "number"}, {"value", Describe(v)}};
    case ValueKind::kString: return json{{"type", "string"}, {"value", v.string}};
    case ValueKind::kObject: return json{{"type", "object"}, {"ref", v.object}};
  }
  return json();
}

nlohmann::json ToJson(const FinalState& state) {
  using nlohmann::json;
  static const char* kKinds[] = {"Normal", "Throw", "NamedError", "Abort"};
  json term{{"kind", kKinds[static_cast<int>(state.termination)]}};
  if (state.termination == Termination::kNamedError) term["name"] = state.error_name;
  if (state.termination == Termination::kThrow) term["value"] = ToJson(state.thrown);
  if (state.termination == Termination::kAbort) {
    term["algorithm"] = state.abort_algorithm;
    term["step"] = state.abort_step;
    term["reason"] = state.abort_reason;
  }
  json globals = json::object();
  for (const auto& [name, v] : state.globals) globals[name] = ToJson(v);
  json heap = json::array();
  for (size_t i = 0; i < state.heap.size(); ++i) {
    const HeapObject& o = state.heap[i];
    json props = json::array();
    for (const auto& p : o.properties) {
      props.push_back(json{{"key", p.key}, {"value", ToJson(p.value)}, {"writable", p.writable}});
    }
    json obj{{"index", i}, {"properties", props}, {"callable", o.callable}, {"frozen", o.frozen}};
    if (static_cast<int>(i) < state.first_user_object) obj["builtin"] = true;
    heap.push_back(obj);
  }
  return json{{"termination", term}, {"globals", globals}, {"heap", heap}};
}

}  // namespace specdiff::spec
