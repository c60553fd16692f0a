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


// Session configuration shared by every stage.

#ifndef SPECDIFF_PIPELINE_SESSION_H_
#define SPECDIFF_PIPELINE_SESSION_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace specdiff::pipeline {

struct SessionConfig {
  uint64_t rng_seed = 1;
  int budget = 2000;
  int repeat = 1;  // independent generations, seeds rng_seed .. rng_seed + repeat - 1
  std::vector<std::string> spec_bugs;  // flag names
  std::string engines;                 // roster file; empty means the default roster
  std::string grammar;                 // grammar file for synth; empty means MiniLang
  std::string start;                   // synth start symbol; empty means the grammar's
  std::string out = "specdiff-out";
  int spec_threshold = -1;  // < 0: floor(N / 2)
  int top = 15;

  nlohmann::json ToJson() const;
  static SessionConfig FromJson(const nlohmann::json& j);
};

// A stage failed; `stage` names it.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace specdiff::pipeline

#endif  // SPECDIFF_PIPELINE_SESSION_H_
