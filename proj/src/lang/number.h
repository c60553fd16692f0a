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


// Number <-> string conversions with the usual script-language rules.

#ifndef SPECDIFF_LANG_NUMBER_H_
#define SPECDIFF_LANG_NUMBER_H_

#include <string>
#include <string_view>

namespace specdiff::lang {

// Shortest round-trip decimal form: "1", "-0.5", "1e+21", "NaN",
// "Infinity". Negative zero prints as "0".
std::string NumberToString(double value);

// String to number: surrounding whitespace ignored, empty string is 0,
// decimal and 0x-prefixed hex literals, optional sign for decimals,
// "Infinity". Anything else is NaN.
double StringToNumber(std::string_view text);

}  // namespace specdiff::lang

#endif  // SPECDIFF_LANG_NUMBER_H_
