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


// The set of abstract algorithms with their steps and branch points, and the
// coverage maps recorded against them.

#ifndef SPECDIFF_SPEC_UNIVERSE_H_
#define SPECDIFF_SPEC_UNIVERSE_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace specdiff::spec {

enum class Alg : int {
#define ALGORITHM(name, steps) k##name,
#include "spec/universe.def"
};

struct AlgorithmInfo {
  std::string_view name;
  int steps = 0;
  std::vector<int> branch_steps;  // step of each branch point, by id - 1
  int step_offset = 0;            // flat index of step 1
  int branch_offset = 0;          // flat index of branch 1
};

const std::vector<AlgorithmInfo>& Universe();
const AlgorithmInfo& Info(Alg alg);
std::optional<Alg> AlgFromName(std::string_view name);

int TotalSteps();
int TotalBranches();  // branch points; outcomes are twice this

// Flat indices. Branch outcomes are 2 * branch + (outcome ? 0 : 1).
int StepIndex(Alg alg, int step);
int BranchOutcomeIndex(Alg alg, int branch, bool outcome);

struct StepId {
  Alg alg;
  int step;
};
struct BranchOutcome {
  Alg alg;
  int branch;
  bool outcome;
};
StepId StepAt(int index);
BranchOutcome BranchOutcomeAt(int index);

// "Alg:3" and "Alg#2:T" labels used in JSON and reports.
std::string StepLabel(int index);
std::string BranchOutcomeLabel(int index);

class CoverageMap {
 public:
  CoverageMap();

  void TouchStep(Alg alg, int step) { steps_[StepIndex(alg, step)] = true; }
  void TouchBranch(Alg alg, int branch, bool outcome) {
    branches_[BranchOutcomeIndex(alg, branch, outcome)] = true;
  }
  bool HasStep(int index) const { return steps_[index]; }
  bool HasBranchOutcome(int index) const { return branches_[index]; }
  bool HasStep(Alg alg, int step) const { return steps_[StepIndex(alg, step)]; }
  bool HasBranch(Alg alg, int branch, bool outcome) const {
    return branches_[BranchOutcomeIndex(alg, branch, outcome)];
  }
  bool TouchesAlgorithm(Alg alg) const;

  int step_count() const;
  int branch_outcome_count() const;
  bool empty() const { return step_count() == 0 && branch_outcome_count() == 0; }

  // Entries of `other` missing here: (steps, branch outcomes).
  std::pair<int, int> CountNew(const CoverageMap& other) const;
  // Adds `other` and returns what was new.
  std::pair<int, int> Merge(const CoverageMap& other);
  bool Contains(const CoverageMap& other) const;

  bool operator==(const CoverageMap&) const = default;

  nlohmann::json ToJson() const;  // {"steps": [...], "branches": [...]}
  static CoverageMap FromJson(const nlohmann::json& j);

 private:
  std::vector<bool> steps_;
  std::vector<bool> branches_;
};

struct CoverageRatio {
  double statements = 0;
  double branches = 0;
};

// Union of the maps over the whole universe.
CoverageRatio SemanticCoverageRatio(const std::vector<CoverageMap>& maps);
CoverageRatio SemanticCoverageRatio(const CoverageMap& merged);

}  // namespace specdiff::spec

#endif  // SPECDIFF_SPEC_UNIVERSE_H_
