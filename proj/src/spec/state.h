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


// Values, heap objects and final states produced by the reference
// semantics. The injector and the engines' assertion helpers read these.

#ifndef SPECDIFF_SPEC_STATE_H_
#define SPECDIFF_SPEC_STATE_H_

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace specdiff::spec {

enum class ValueKind { kUndefined, kNull, kBoolean, kNumber, kString, kObject };

struct Value {
  ValueKind kind = ValueKind::kUndefined;
  bool boolean = false;
  double number = 0;
  std::string string;
  int object = -1;  // heap index

  static Value Undefined() { return {}; }
  static Value Null() { return {ValueKind::kNull}; }
  static Value Bool(bool b) { return {ValueKind::kBoolean, b}; }
  static Value Number(double n) { return {ValueKind::kNumber, false, n}; }
  static Value String(std::string s) { return {ValueKind::kString, false, 0, std::move(s)}; }
  static Value Object(int index) { return {ValueKind::kObject, false, 0, {}, index}; }

  bool IsObject() const { return kind == ValueKind::kObject; }
};

// SameValue: NaN equals NaN, +0 and -0 differ, objects by identity.
bool SameValue(const Value& a, const Value& b);

// Short rendering for messages, e.g. `-0`, `"abc"`, `#3`.
std::string Describe(const Value& v);

struct PropertySlot {
  std::string key;
  Value value;
  bool writable = true;
};

struct HeapObject {
  std::vector<PropertySlot> properties;  // creation order
  bool callable = false;
  bool frozen = false;
  bool is_error = false;

  const PropertySlot* Find(const std::string& key) const;
  PropertySlot* Find(const std::string& key);
};

enum class Termination { kNormal, kThrow, kNamedError, kAbort };

struct FinalState {
  Termination termination = Termination::kNormal;
  std::string error_name;  // kNamedError
  Value thrown;            // kThrow
  // kAbort: where and why.
  std::string abort_algorithm;
  int abort_step = 0;
  std::string abort_reason;
  bool resource_limit = false;  // abort caused by the fuel / depth limits

  // Program-declared globals only; builtins are excluded.
  std::map<std::string, Value> globals;
  std::vector<HeapObject> heap;
  int first_user_object = 0;  // heap indices below are builtins
  // False when the program rebound a builtin global such as `keys`.
  bool builtins_intact = true;
};

// "Normal", "Throw", the error name, or "Abort".
std::string TagOf(const FinalState& state);

nlohmann::json ToJson(const Value& v);
nlohmann::json ToJson(const FinalState& state);

}  // namespace specdiff::spec

#endif  // SPECDIFF_SPEC_STATE_H_
