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


#include "spec/universe.h"

#include <stdexcept>

namespace specdiff::spec {
namespace {

struct Tables {
  std::vector<AlgorithmInfo> algs;
  std::vector<StepId> steps;
  std::vector<BranchOutcome> outcomes;
  int branch_points = 0;
};

const Tables& GetTables() {
  static const Tables kTables = [] {
    Tables t;
#define ALGORITHM(name, nsteps) t.algs.push_back({#name, nsteps, {}, 0, 0});
#define BRANCH(alg, id, step) t.algs.back().branch_steps.push_back(step);
#include "spec/universe.def"
    for (size_t a = 0; a < t.algs.size(); ++a) {
      AlgorithmInfo& info = t.algs[a];
      info.step_offset = static_cast<int>(t.steps.size());
      info.branch_offset = t.branch_points;
      for (int s = 1; s <= info.steps; ++s) t.steps.push_back({static_cast<Alg>(a), s});
      for (size_t b = 0; b < info.branch_steps.size(); ++b) {
        if (info.branch_steps[b] < 1 || info.branch_steps[b] > info.steps)
          throw std::logic_error("branch outside its algorithm's steps");
        t.outcomes.push_back({static_cast<Alg>(a), static_cast<int>(b) + 1, true});
        t.outcomes.push_back({static_cast<Alg>(a), static_cast<int>(b) + 1, false});
      }
      t.branch_points += static_cast<int>(info.branch_steps.size());
    }
    return t;
  }();
  return kTables;
}

}  // namespace

const std::vector<AlgorithmInfo>& Universe() { return GetTables().algs; }

const AlgorithmInfo& Info(Alg alg) { return GetTables().algs[static_cast<size_t>(alg)]; }

std::optional<Alg> AlgFromName(std::string_view name) {
  const auto& algs = Universe();
  for (size_t i = 0; i < algs.size(); ++i)
    if (algs[i].name == name) return static_cast<Alg>(i);
  return std::nullopt;
}

int TotalSteps() { return static_cast<int>(GetTables().steps.size()); }
int TotalBranches() { return GetTables().branch_points; }

int StepIndex(Alg alg, int step) { return Info(alg).step_offset + step - 1; }

int BranchOutcomeIndex(Alg alg, int branch, bool outcome) {
  return 2 * (Info(alg).branch_offset + branch - 1) + (outcome ? 0 : 1);
}

StepId StepAt(int index) { return GetTables().steps.at(index); }
BranchOutcome BranchOutcomeAt(int index) { return GetTables().outcomes.at(index); }

std::string StepLabel(int index) {
  StepId s = StepAt(index);
  return std::string(Info(s.alg).name) + ":" + std::to_string(s.step);
}

std::string BranchOutcomeLabel(int index) {
  BranchOutcome b = BranchOutcomeAt(index);
  return std::string(Info(b.alg).name) + "#" + std::to_string(b.branch) +
         (b.outcome ? ":T" : ":F");
}

CoverageMap::CoverageMap() : steps_(TotalSteps(), false), branches_(2 * TotalBranches(), false) {}

bool CoverageMap::TouchesAlgorithm(Alg alg) const {
  const AlgorithmInfo& info = Info(alg);
  for (int s = 0; s < info.steps; ++s)
    if (steps_[info.step_offset + s]) return true;
  return false;
}

int CoverageMap::step_count() const {
  int n = 0;
  for (bool b : steps_) n += b;
  return n;
}

int CoverageMap::branch_outcome_count() const {
  int n = 0;
  for (bool b : branches_) n += b;
  return n;
}

std::pair<int, int> CoverageMap::CountNew(const CoverageMap& other) const {
  std::pair<int, int> added{0, 0};
  for (size_t i = 0; i < steps_.size(); ++i) added.first += other.steps_[i] && !steps_[i];
  for (size_t i = 0; i < branches_.size(); ++i) added.second += other.branches_[i] && !branches_[i];
  return added;
}

std::pair<int, int> CoverageMap::Merge(const CoverageMap& other) {
  std::pair<int, int> added = CountNew(other);
  for (size_t i = 0; i < steps_.size(); ++i) steps_[i] = steps_[i] || other.steps_[i];
  for (size_t i = 0; i < branches_.size(); ++i) branches_[i] = branches_[i] || other.branches_[i];
  return added;
}

bool CoverageMap::Contains(const CoverageMap& other) const {
  auto added = CountNew(other);
  return added.first == 0 && added.second == 0;
}

nlohmann::json CoverageMap::ToJson() const {
  nlohmann::json steps = nlohmann::json::array(), branches = nlohmann::json::array();
  for (size_t i = 0; i < steps_.size(); ++i)
    if (steps_[i]) steps.push_back(StepLabel(static_cast<int>(i)));
  for (size_t i = 0; i < branches_.size(); ++i)
    if (branches_[i]) branches.push_back(BranchOutcomeLabel(static_cast<int>(i)));
  return {{"steps", steps}, {"branches", branches}};
}

CoverageMap CoverageMap::FromJson(const nlohmann::json& j) {
  CoverageMap m;
  for (const auto& s : j.at("steps")) {
    std::string label = s.get<std::string>();
    size_t colon = label.rfind(':');
    auto alg = AlgFromName(label.substr(0, colon));
    if (!alg || colon == std::string::npos) throw std::invalid_argument("bad step label: " + label);
    int step = std::stoi(label.substr(colon + 1));
    if (step < 1 || step > Info(*alg).steps) throw std::invalid_argument("bad step label: " + label);
    m.TouchStep(*alg, step);
  }
  for (const auto& b : j.at("branches")) {
    std::string label = b.get<std::string>();
    size_t hash = label.rfind('#');
    size_t colon = label.rfind(':');
    if (hash == std::string::npos || colon == std::string::npos || colon < hash)
      throw std::invalid_argument("bad branch label: " + label);
    auto alg = AlgFromName(label.substr(0, hash));
    int id = std::stoi(label.substr(hash + 1, colon - hash - 1));
    std::string arm = label.substr(colon + 1);
    if (!alg || id < 1 || id > static_cast<int>(Info(*alg).branch_steps.size()) ||
        (arm != "T" && arm != "F"))
      throw std::invalid_argument("bad branch label: " + label);
    m.TouchBranch(*alg, id, arm == "T");
  }
  return m;
}

CoverageRatio SemanticCoverageRatio(const CoverageMap& merged) {
  CoverageRatio r;
  if (TotalSteps() > 0) r.statements = static_cast<double>(merged.step_count()) / TotalSteps();
  if (TotalBranches() > 0)
    r.branches = static_cast<double>(merged.branch_outcome_count()) / (2.0 * TotalBranches());
  return r;
}

CoverageRatio SemanticCoverageRatio(const std::vector<CoverageMap>& maps) {
  if (maps.empty()) return {};
  CoverageMap merged;
  for (const auto& m : maps) merged.Merge(m);
  return SemanticCoverageRatio(merged);
}

}  // namespace specdiff::spec
