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


// Program pool: greedy seed filtering and coverage-guided growth.

#ifndef SPECDIFF_GENERATOR_POOL_H_
#define SPECDIFF_GENERATOR_POOL_H_

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "generator/mutate.h"
#include "grammar/parser.h"
#include "spec/bugs.h"
#include "spec/universe.h"

namespace specdiff::generator {

struct PoolMember {
  std::string source;
  grammar::NodePtr tree;
  spec::CoverageMap coverage;
  int admitted_at = 0;           // 0 for seeds, else the growth iteration
  std::string method = "seed";
  uint64_t rng_seed = 0;         // generation that admitted it; 0 for seeds
  int new_steps = 0;
  int new_branches = 0;
};

struct ProgramPool {
  std::vector<PoolMember> programs;
  spec::CoverageMap cumulative;
  uint64_t rng_seed = 1;

  spec::CoverageRatio Ratio() const { return spec::SemanticCoverageRatio(cumulative); }
  bool Contains(const std::string& source) const { return sources_.count(source) > 0; }
  // Adds `member` if it covers something new; fills its new_* counts.
  bool Admit(PoolMember member);
  // Adds `member` as recorded, e.g. when reloading a saved pool.
  void Restore(PoolMember member);

 private:
  std::set<std::string> sources_;
};

// Keeps, in input order, every seed that adds coverage. Seeds must parse;
// runs that hit a resource limit are skipped. `on_parsed`, if set, sees
// every seed's tree.
ProgramPool FilterSeeds(
    const std::vector<std::string>& seeds, const spec::SpecBugCatalog& bugs,
    const std::function<void(size_t, const grammar::NodePtr&)>& on_parsed = nullptr);

// The pool member to mutate when aiming at `uncovered`: the shortest
// program covering the other outcome of the same branch (earliest on ties),
// or a random member when none does. The pool must not be empty.
const PoolMember& SelectTarget(const ProgramPool& pool, const spec::BranchOutcome& uncovered,
                               Rng& rng);

struct GrowthPoint {
  int iteration = 0;
  double statements = 0;
  double branches = 0;
};

struct GrowthOptions {
  int budget = 2000;
  int retry_limit = 20;  // attempts per uncovered branch outcome
};

struct GrowthStats {
  std::vector<GrowthPoint> curve;  // one point per iteration
  std::map<std::string, int> attempts;
  std::map<std::string, int> admitted;
  std::map<std::string, int> failed;  // MutationFailed or unparseable mutant
  int iterations = 0;
};

// Mutates pool members toward uncovered branch outcomes, round-robin, until
// the budget is spent or every outcome is covered or out of retries. The RNG
// is seeded from pool.rng_seed.
GrowthStats GrowPool(ProgramPool& pool, const spec::SpecBugCatalog& bugs, FragmentBank& bank,
                     const GrowthOptions& options);

void WriteGrowthCsv(const GrowthStats& stats, std::ostream& out);

}  // namespace specdiff::generator

#endif  // SPECDIFF_GENERATOR_POOL_H_
