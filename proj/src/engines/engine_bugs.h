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


#ifndef SPECDIFF_ENGINES_ENGINE_BUGS_H_
#define SPECDIFF_ENGINES_ENGINE_BUGS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace specdiff::engines {

// Seeded defects for the in-process engines.
enum class EngineBug {
  kEqCoerceWrong,         // `==` converts objects with toString before valueOf
  kNegZeroLost,           // arithmetic results of -0 become +0
  kFrozenWriteSilent,     // writes to frozen objects are silently ignored
  kKeyorderEngine,        // array literals define "length" before the elements
  kUninitParamUndefined,  // reading a parameter before initialization yields undefined
};

inline constexpr EngineBug kAllEngineBugs[] = {
    EngineBug::kEqCoerceWrong, EngineBug::kNegZeroLost, EngineBug::kFrozenWriteSilent,
    EngineBug::kKeyorderEngine, EngineBug::kUninitParamUndefined};

std::string_view FlagName(EngineBug bug);
std::optional<EngineBug> EngineBugFromName(std::string_view name);

class EngineBugCatalog {
 public:
  EngineBugCatalog() = default;
  // Throws std::invalid_argument on an unknown flag name.
  static EngineBugCatalog FromNames(const std::vector<std::string>& names);

  bool Has(EngineBug bug) const { return (bits_ >> static_cast<int>(bug)) & 1u; }
  EngineBugCatalog& Enable(EngineBug bug) {
    bits_ |= 1u << static_cast<int>(bug);
    return *this;
  }
  bool empty() const { return bits_ == 0; }
  std::vector<std::string> Names() const;

  bool operator==(const EngineBugCatalog&) const = default;

 private:
  unsigned bits_ = 0;
};

}  // namespace specdiff::engines

#endif  // SPECDIFF_ENGINES_ENGINE_BUGS_H_
