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


#include "spec/bugs.h"

#include <stdexcept>

namespace specdiff::spec {

std::string_view FlagName(SpecBug bug) {
  switch (bug) {
    case SpecBug::kAbruptEq: return "ABRUPT_EQ";
    case SpecBug::kTypoUpdate: return "TYPO_UPDATE";
    case SpecBug::kKeyorderFn: return "KEYORDER_FN";
    case SpecBug::kAbruptObjlit: return "ABRUPT_OBJLIT";
  }
  return "";
}

std::optional<SpecBug> SpecBugFromName(std::string_view name) {
  for (SpecBug b : kAllSpecBugs) {
    if (FlagName(b) == name) return b;
  }
  return std::nullopt;
}

std::string_view DefectAlgorithm(SpecBug bug) {
  switch (bug) {
    case SpecBug::kAbruptEq: return "AbstractEquality";
    case SpecBug::kTypoUpdate: return "EvaluateUpdateExpression";
    case SpecBug::kKeyorderFn: return "InstantiateFunctionObject";
    case SpecBug::kAbruptObjlit: return "EvaluatePropertyDefinition";
  }
  return "";
}

SpecBugCatalog SpecBugCatalog::FromNames(const std::vector<std::string>& names) {
  SpecBugCatalog c;
  for (const auto& n : names) {
    auto b = SpecBugFromName(n);
    if (!b) throw std::invalid_argument("unknown spec bug flag '" + n + "'");
    c.Enable(*b);
  }
  return c;
}

std::vector<std::string> SpecBugCatalog::Names() const {
  std::vector<std::string> out;
  for (SpecBug b : kAllSpecBugs) {
    if (Has(b)) out.emplace_back(FlagName(b));
  }
  return out;
}

}  // namespace specdiff::spec
