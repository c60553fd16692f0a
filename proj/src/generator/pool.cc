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


#include "generator/pool.h"

#include <algorithm>
#include <cstdio>

#include "grammar/grammar.h"
#include "grammar/lexer.h"
#include "lang/ast.h"
#include "spec/interpreter.h"

namespace specdiff::generator {
namespace {

struct Evaluation {
  bool usable = false;
  spec::EvalResult result;
};

Evaluation EvaluateTree(const grammar::NodePtr& tree, const spec::SpecBugCatalog& bugs,
                        bool attribution) {
  Evaluation e;
  spec::EvalOptions options;
  options.bugs = bugs;
  options.attribution = attribution;
  e.result = spec::Evaluate(lang::Lower(tree), options);
  const auto& s = e.result.state;
  e.usable = !(s.termination == spec::Termination::kAbort && s.resource_limit);
  return e;
}

std::string FormatRatio(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

bool ProgramPool::Admit(PoolMember member) {
  if (sources_.count(member.source)) return false;
  auto [steps, branches] = cumulative.CountNew(member.coverage);
  if (steps == 0 && branches == 0) return false;
  cumulative.Merge(member.coverage);
  member.new_steps = steps;
  member.new_branches = branches;
  sources_.insert(member.source);
  programs.push_back(std::move(member));
  return true;
}

void ProgramPool::Restore(PoolMember member) {
  cumulative.Merge(member.coverage);
  sources_.insert(member.source);
  programs.push_back(std::move(member));
}

ProgramPool FilterSeeds(
    const std::vector<std::string>& seeds, const spec::SpecBugCatalog& bugs,
    const std::function<void(size_t, const grammar::NodePtr&)>& on_parsed) {
  const auto& g = grammar::Grammar::MiniLang();
  ProgramPool pool;
  for (size_t i = 0; i < seeds.size(); ++i) {
    const std::string& source = seeds[i];
    grammar::NodePtr tree = grammar::Parse(g, source);
    if (on_parsed) on_parsed(i, tree);
    if (pool.Contains(source)) continue;
    Evaluation e = EvaluateTree(tree, bugs, false);
    if (!e.usable) continue;
    PoolMember m;
    m.source = source;
    m.tree = tree;
    m.coverage = std::move(e.result.coverage);
    pool.Admit(std::move(m));
  }
  return pool;
}

const PoolMember& SelectTarget(const ProgramPool& pool, const spec::BranchOutcome& uncovered,
                               Rng& rng) {
  if (pool.programs.empty()) throw std::invalid_argument("empty pool");
  int sibling = spec::BranchOutcomeIndex(uncovered.alg, uncovered.branch, !uncovered.outcome);
  const PoolMember* best = nullptr;
  for (const auto& p : pool.programs) {
    if (!p.coverage.HasBranchOutcome(sibling)) continue;
    if (!best || p.source.size() < best->source.size()) best = &p;
  }
  if (best) return *best;
  return pool.programs[Pick(rng, pool.programs.size())];
}

GrowthStats GrowPool(ProgramPool& pool, const spec::SpecBugCatalog& bugs, FragmentBank& bank,
                     const GrowthOptions& options) {
  GrowthStats stats;
  if (pool.programs.empty()) return stats;
  Rng rng(pool.rng_seed);
  const auto& g = grammar::Grammar::MiniLang();

  MutationContext ctx;
  ctx.fragments = &bank;
  ctx.strings = spec::ConditionStrings();
  ctx.property_keys = spec::SemanticPropertyKeys();

  const int outcomes = 2 * spec::TotalBranches();
  std::vector<int> retries(outcomes, 0);
  int cursor = 0;
  for (int iteration = 1; iteration <= options.budget; ++iteration) {
    int chosen = -1;
    for (int k = 0; k < outcomes; ++k) {
      int idx = (cursor + k) % outcomes;
      if (!pool.cumulative.HasBranchOutcome(idx) && retries[idx] < options.retry_limit) {
        chosen = idx;
        break;
      }
    }
    if (chosen < 0) break;
    cursor = (chosen + 1) % outcomes;
    ++retries[chosen];
    stats.iterations = iteration;

    spec::BranchOutcome focus = spec::BranchOutcomeAt(chosen);
    const PoolMember& target = SelectTarget(pool, focus, rng);
    MutationMethod method = kAllMethods[Pick(rng, std::size(kAllMethods))];
    std::string name(MethodName(method));
    ++stats.attempts[name];

    std::map<spec::Alg, std::vector<int>> attribution;
    if (method == MutationMethod::kNearestSyntaxTree) {
      attribution = EvaluateTree(target.tree, bugs, true).result.attribution;
      ctx.attribution = &attribution;
      ctx.focus = focus;
    } else {
      ctx.attribution = nullptr;
      ctx.focus.reset();
    }

    grammar::NodePtr mutant;
    std::string source;
    try {
      source = grammar::Unparse(Mutate(target.tree, method, ctx, rng));
      mutant = grammar::Parse(g, source);
    } catch (const MutationFailed&) {
      ++stats.failed[name];
    } catch (const grammar::ParseFailure&) {
      ++stats.failed[name];
    }
    if (mutant && !pool.Contains(source)) {
      Evaluation e = EvaluateTree(mutant, bugs, false);
      if (e.usable) {
        PoolMember m;
        m.source = source;
        m.tree = mutant;
        m.coverage = std::move(e.result.coverage);
        m.admitted_at = iteration;
        m.method = name;
        m.rng_seed = pool.rng_seed;
        if (pool.Admit(std::move(m))) ++stats.admitted[name];
      }
    }
    auto ratio = pool.Ratio();
    stats.curve.push_back({iteration, ratio.statements, ratio.branches});
  }
  return stats;
}

void WriteGrowthCsv(const GrowthStats& stats, std::ostream& out) {
  out << "iteration,stmt_ratio,branch_ratio\n";
  for (const auto& p : stats.curve)
    out << p.iteration << "," << FormatRatio(p.statements) << "," << FormatRatio(p.branches)
        << "\n";
}

}  // namespace specdiff::generator
