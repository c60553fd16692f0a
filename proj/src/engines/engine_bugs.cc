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


#include "engines/engine_bugs.h"

#include <stdexcept>

namespace specdiff::engines {

std::string_view FlagName(EngineBug bug) {
  switch (bug) {
    case EngineBug::kEqCoerceWrong: return "EQ_COERCE_WRONG";
    case EngineBug::kNegZeroLost: return "NEG_ZERO_LOST";
    case EngineBug::kFrozenWriteSilent: return "FROZEN_WRITE_SILENT";
    case EngineBug::kKeyorderEngine: return "KEYORDER_ENGINE";
    case EngineBug::kUninitParamUndefined: return "UNINIT_PARAM_UNDEFINED";
  }
  return "";
}

std::optional<EngineBug> EngineBugFromName(std::string_view name) {
  for (EngineBug b : kAllEngineBugs) {
    if (FlagName(b) == name) return b;
  }
  return std::nullopt;
}

EngineBugCatalog EngineBugCatalog::FromNames(const std::vector<std::string>& names) {
  EngineBugCatalog c;
  for (const auto& n : names) {
    auto b = EngineBugFromName(n);
    if (!b) throw std::invalid_argument("unknown engine bug flag '" + n + "'");
    c.Enable(*b);
  }
  return c;
}

std::vector<std::string> EngineBugCatalog::Names() const {
  std::vector<std::string> out;
  for (EngineBug b : kAllEngineBugs) {
    if (Has(b)) out.emplace_back(FlagName(b));
  }
  return out;
}

}  // namespace specdiff::engines
