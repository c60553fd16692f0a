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


// The five mutation methods used to grow the program pool.

#ifndef SPECDIFF_GENERATOR_MUTATE_H_
#define SPECDIFF_GENERATOR_MUTATE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grammar/grammar.h"
#include "grammar/parser.h"
#include "grammar/shortest.h"
#include "spec/universe.h"

namespace specdiff::generator {

using Rng = std::mt19937_64;

// Uniform index below n (n > 0).
inline size_t Pick(Rng& rng, size_t n) { return static_cast<size_t>(rng() % n); }

enum class MutationMethod {
  kRandomMutation,
  kNearestSyntaxTree,
  kStringSubstitution,
  kObjectSubstitution,
  kStatementInsertion,
};

inline constexpr MutationMethod kAllMethods[] = {
    MutationMethod::kRandomMutation, MutationMethod::kNearestSyntaxTree,
    MutationMethod::kStringSubstitution, MutationMethod::kObjectSubstitution,
    MutationMethod::kStatementInsertion};

std::string_view MethodName(MutationMethod m);

class MutationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-recursively synthesized strings per non-terminal, computed on first
// use. At most `cap` strings are kept per non-terminal, sampled evenly.
class FragmentBank {
 public:
  explicit FragmentBank(const grammar::Grammar& grammar, size_t cap = 3000);

  const std::vector<std::string>& Fragments(const std::string& nonterminal);
  // Parse tree of Fragments(nonterminal)[index].
  grammar::NodePtr Tree(const std::string& nonterminal, size_t index);

  const grammar::Grammar& grammar() const { return grammar_; }

 private:
  const grammar::Grammar& grammar_;
  grammar::ShortestStringMap shortest_;
  size_t cap_;
  std::map<std::string, std::vector<std::string>> fragments_;
  std::map<std::pair<std::string, size_t>, grammar::NodePtr> trees_;
};

struct MutationContext {
  FragmentBank* fragments = nullptr;
  std::vector<std::string> strings;        // branch-condition literals
  std::vector<std::string> property_keys;  // keys the semantics looks up
  // For NearestSyntaxTree: the uncovered branch and, per algorithm, the
  // innermost parse-tree nodes whose evaluation ran it.
  std::optional<spec::BranchOutcome> focus;
  const std::map<spec::Alg, std::vector<int>>* attribution = nullptr;
};

// Returns a grammatical tree whose rendering differs from `target`'s.
// Throws MutationFailed when the method has no applicable site.
grammar::NodePtr Mutate(const grammar::NodePtr& target, MutationMethod method,
                        const MutationContext& ctx, Rng& rng);

}  // namespace specdiff::generator

#endif  // SPECDIFF_GENERATOR_MUTATE_H_
