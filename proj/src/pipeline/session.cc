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


#include "pipeline/session.h"

namespace specdiff::pipeline {

nlohmann::json SessionConfig::ToJson() const {
  return {{"rng_seed", rng_seed},   {"budget", budget},   {"repeat", repeat},
          {"spec_bugs", spec_bugs},
          {"engines", engines},     {"grammar", grammar}, {"start", start},
          {"out", out},             {"spec_threshold", spec_threshold},
          {"top", top}};
}

SessionConfig SessionConfig::FromJson(const nlohmann::json& j) {
  SessionConfig c;
  c.rng_seed = j.value("rng_seed", c.rng_seed);
  c.budget = j.value("budget", c.budget);
  c.repeat = j.value("repeat", c.repeat);
  c.spec_bugs = j.value("spec_bugs", c.spec_bugs);
  c.engines = j.value("engines", c.engines);
  c.grammar = j.value("grammar", c.grammar);
  c.start = j.value("start", c.start);
  c.out = j.value("out", c.out);
  c.spec_threshold = j.value("spec_threshold", c.spec_threshold);
  c.top = j.value("top", c.top);
  return c;
}

}  // namespace specdiff::pipeline
