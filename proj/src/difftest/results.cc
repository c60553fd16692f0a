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


#include "difftest/results.h"

#include <stdexcept>

namespace specdiff::difftest {

nlohmann::json ToJson(const SuiteResults& results) {
  const auto& m = results.matrix;
  nlohmann::json tests = nlohmann::json::array();
  for (size_t t = 0; t < m.tests.size(); ++t) {
    nlohmann::json outcomes = nlohmann::json::array();
    for (const auto& cell : m.cells[t]) {
      outcomes.push_back({{"engine", cell.engine},
                          {"status", std::string(engines::StatusName(cell.status))},
                          {"message", cell.message}});
    }
    tests.push_back({{"name", m.tests[t]}, {"tag", results.tags.at(t)}, {"outcomes", outcomes}});
  }
  return {{"schema", kResultsSchema}, {"engines", m.engines}, {"tests", tests}};
}

SuiteResults ResultsFromJson(const nlohmann::json& j) {
  if (j.value("schema", 0) != kResultsSchema)
    throw std::invalid_argument("unsupported results schema");
  SuiteResults r;
  r.matrix.engines = j.at("engines").get<std::vector<std::string>>();
  for (const auto& t : j.at("tests")) {
    r.matrix.tests.push_back(t.at("name").get<std::string>());
    r.tags.push_back(t.at("tag").get<std::string>());
    std::vector<engines::TestOutcome> row;
    for (const auto& o : t.at("outcomes")) {
      row.push_back({o.at("engine").get<std::string>(),
                     engines::StatusFromName(o.at("status").get<std::string>()),
                     o.value("message", "")});
    }
    if (row.size() != r.matrix.engines.size())
      throw std::invalid_argument("incomplete result row for " + r.matrix.tests.back());
    for (size_t e = 0; e < row.size(); ++e)
      if (row[e].engine != r.matrix.engines[e])
        throw std::invalid_argument("engine order mismatch in " + r.matrix.tests.back());
    r.matrix.cells.push_back(std::move(row));
  }
  return r;
}

bool PassesEverywhere(const SuiteResults& results, size_t test) {
  for (const auto& c : results.matrix.cells[test])
    if (c.status != engines::Status::kPass) return false;
  return true;
}

bool IsAbortTagged(const SuiteResults& results, size_t test) {
  return results.tags[test] == "Abort";
}

}  // namespace specdiff::difftest
