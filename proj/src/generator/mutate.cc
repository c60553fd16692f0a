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


#include "generator/mutate.h"

#include <set>

#include "grammar/lexer.h"
#include "grammar/synthesize.h"

namespace specdiff::generator {
namespace {

using grammar::NodePtr;
using grammar::SyntaxNode;

const std::set<std::string>& ReplaceableProductions() {
  static const std::set<std::string> kProductions = {
      "Statement",          "VariableDeclaration",    "FunctionDeclaration",
      "PropertyDefinition", "Expression",             "AssignmentExpression",
      "EqualityExpression", "RelationalExpression",   "AdditiveExpression",
      "MultiplicativeExpression", "UnaryExpression",  "UpdateExpression",
      "LeftHandSideExpression", "MemberExpression",   "CallExpression",
      "PrimaryExpression"};
  return kProductions;
}

struct Site {
  size_t id;
  const SyntaxNode* node;
  const SyntaxNode* parent;
};

std::vector<Site> Sites(const NodePtr& root) {
  std::vector<Site> out;
  std::vector<std::pair<const SyntaxNode*, const SyntaxNode*>> stack = {{root.get(), nullptr}};
  // Same order as grammar::Preorder so ids line up.
  while (!stack.empty()) {
    auto [n, parent] = stack.back();
    stack.pop_back();
    out.push_back({out.size(), n, parent});
    for (auto it = n->children.rbegin(); it != n->children.rend(); ++it)
      stack.push_back({it->get(), n});
  }
  return out;
}

template <typename Pred>
std::vector<Site> Filter(const std::vector<Site>& sites, Pred pred) {
  std::vector<Site> out;
  for (const auto& s : sites)
    if (!s.node->is_terminal && pred(s)) out.push_back(s);
  return out;
}

NodePtr ParseAs(FragmentBank& bank, const std::string& text, const std::string& nt) {
  return grammar::Parse(bank.grammar(), text, nt);
}

NodePtr RandomFragment(FragmentBank& bank, const std::string& nt, Rng& rng) {
  const auto& frags = bank.Fragments(nt);
  if (frags.empty()) throw MutationFailed("no fragments for " + nt);
  return bank.Tree(nt, Pick(rng, frags.size()));
}

std::string RandomText(FragmentBank& bank, const std::string& nt, Rng& rng) {
  const auto& frags = bank.Fragments(nt);
  if (frags.empty()) throw MutationFailed("no fragments for " + nt);
  return frags[Pick(rng, frags.size())];
}

NodePtr RandomMutation(const NodePtr& root, const MutationContext& ctx, Rng& rng) {
  auto sites = Filter(Sites(root), [](const Site& s) {
    return ReplaceableProductions().count(s.node->production) > 0;
  });
  if (sites.empty()) throw MutationFailed("no statement, declaration or expression");
  const Site& site = sites[Pick(rng, sites.size())];
  return grammar::ReplaceNode(root, site.id,
                              RandomFragment(*ctx.fragments, site.node->production, rng));
}

NodePtr NearestSyntaxTree(const NodePtr& root, const MutationContext& ctx, Rng& rng) {
  if (!ctx.focus || !ctx.attribution) throw MutationFailed("no focused branch");
  auto it = ctx.attribution->find(ctx.focus->alg);
  if (it == ctx.attribution->end() || it->second.empty())
    throw MutationFailed("focused algorithm never ran");
  auto sites = Sites(root);
  std::vector<size_t> candidates;
  for (int id : it->second) {
    if (id < 0 || static_cast<size_t>(id) >= sites.size()) continue;
    const SyntaxNode* n = sites[id].node;
    if (!n->is_terminal && !ctx.fragments->Fragments(n->production).empty())
      candidates.push_back(static_cast<size_t>(id));
  }
  if (candidates.empty()) throw MutationFailed("no replaceable node");
  size_t id = candidates[Pick(rng, candidates.size())];
  return grammar::ReplaceNode(root, id,
                              RandomFragment(*ctx.fragments, sites[id].node->production, rng));
}

NodePtr StringSubstitution(const NodePtr& root, const MutationContext& ctx, Rng& rng) {
  auto sites = Filter(Sites(root), [](const Site& s) {
    return s.node->production == "PrimaryExpression" || s.node->production == "PropertyName";
  });
  if (sites.empty() || ctx.strings.empty()) throw MutationFailed("no expression");
  const Site& site = sites[Pick(rng, sites.size())];
  std::string literal = grammar::EncodeStringLiteral(ctx.strings[Pick(rng, ctx.strings.size())]);
  return grammar::ReplaceNode(root, site.id,
                              ParseAs(*ctx.fragments, literal, site.node->production));
}

std::string RandomPropertyValue(const MutationContext& ctx, Rng& rng) {
  switch (Pick(rng, 8)) {
    case 0: return "0";
    case 1: return "-0";
    case 2: return grammar::EncodeStringLiteral(ctx.strings[Pick(rng, ctx.strings.size())]);
    case 3: return "function() { return 0; }";
    case 4: return "function() { return {}; }";
    case 5: return "function() { throw 0; }";
    case 6: return "{}";
    default: return RandomText(*ctx.fragments, "AssignmentExpression", rng);
  }
}

NodePtr ObjectSubstitution(const NodePtr& root, const MutationContext& ctx, Rng& rng) {
  auto sites = Filter(Sites(root), [](const Site& s) {
    return s.node->production == "PrimaryExpression";
  });
  if (sites.empty() || ctx.property_keys.empty() || ctx.strings.empty())
    throw MutationFailed("no expression");
  const Site& site = sites[Pick(rng, sites.size())];
  size_t count = 1 + Pick(rng, 2);
  std::string text = "{";
  for (size_t i = 0; i < count; ++i) {
    if (i) text += ", ";
    text += ctx.property_keys[Pick(rng, ctx.property_keys.size())] + ": " +
            RandomPropertyValue(ctx, rng);
  }
  text += "}";
  return grammar::ReplaceNode(root, site.id, ParseAs(*ctx.fragments, text, "PrimaryExpression"));
}

NodePtr StatementInsertion(const NodePtr& root, const MutationContext& ctx, Rng& rng) {
  auto sites = Filter(Sites(root), [](const Site& s) {
    return s.node->production == "StatementList" &&
           !(s.parent && s.parent->production == "StatementList");
  });
  if (sites.empty()) throw MutationFailed("no block");
  const Site& site = sites[Pick(rng, sites.size())];
  std::string stmt;
  if (Pick(rng, 2) == 0) {
    switch (Pick(rng, 5)) {
      case 0: stmt = "x();"; break;
      case 1: stmt = "return;"; break;
      case 2: stmt = "return " + RandomText(*ctx.fragments, "AssignmentExpression", rng) + ";"; break;
      case 3: stmt = "break;"; break;
      default: stmt = "throw " + RandomText(*ctx.fragments, "AssignmentExpression", rng) + ";"; break;
    }
  } else {
    stmt = RandomText(*ctx.fragments, "Statement", rng);
  }
  NodePtr statement = ParseAs(*ctx.fragments, stmt, "Statement");
  const SyntaxNode* list = site.node;
  NodePtr list_copy = SyntaxNode::Inner(list->production, list->alt_index, list->children);
  NodePtr extended = SyntaxNode::Inner("StatementList", 0, {list_copy, statement});
  return grammar::ReplaceNode(root, site.id, extended);
}

}  // namespace

std::string_view MethodName(MutationMethod m) {
  switch (m) {
    case MutationMethod::kRandomMutation: return "RandomMutation";
    case MutationMethod::kNearestSyntaxTree: return "NearestSyntaxTree";
    case MutationMethod::kStringSubstitution: return "StringSubstitution";
    case MutationMethod::kObjectSubstitution: return "ObjectSubstitution";
    case MutationMethod::kStatementInsertion: return "StatementInsertion";
  }
  return "";
}

FragmentBank::FragmentBank(const grammar::Grammar& grammar, size_t cap)
    : grammar_(grammar), shortest_(grammar::ShortestStrings(grammar)), cap_(cap) {}

const std::vector<std::string>& FragmentBank::Fragments(const std::string& nonterminal) {
  auto it = fragments_.find(nonterminal);
  if (it != fragments_.end()) return it->second;
  std::vector<std::string> all;
  if (grammar_.NonterminalIndex(nonterminal) >= 0)
    all = grammar::NonRecursiveSynthesize(grammar_, nonterminal, shortest_);
  std::vector<std::string> kept;
  if (all.size() <= cap_) {
    kept = std::move(all);
  } else {
    for (size_t i = 0; i < cap_; ++i) kept.push_back(all[i * all.size() / cap_]);
  }
  return fragments_.emplace(nonterminal, std::move(kept)).first->second;
}

NodePtr FragmentBank::Tree(const std::string& nonterminal, size_t index) {
  auto key = std::make_pair(nonterminal, index);
  auto it = trees_.find(key);
  if (it != trees_.end()) return it->second;
  NodePtr tree = grammar::Parse(grammar_, Fragments(nonterminal).at(index), nonterminal);
  trees_.emplace(key, tree);
  return tree;
}

NodePtr Mutate(const NodePtr& target, MutationMethod method, const MutationContext& ctx,
               Rng& rng) {
  if (!ctx.fragments) throw std::invalid_argument("mutation context without fragments");
  const std::string before = grammar::Unparse(target);
  for (int attempt = 0; attempt < 8; ++attempt) {
    NodePtr out;
    switch (method) {
      case MutationMethod::kRandomMutation: out = RandomMutation(target, ctx, rng); break;
      case MutationMethod::kNearestSyntaxTree: out = NearestSyntaxTree(target, ctx, rng); break;
      case MutationMethod::kStringSubstitution: out = StringSubstitution(target, ctx, rng); break;
      case MutationMethod::kObjectSubstitution: out = ObjectSubstitution(target, ctx, rng); break;
      case MutationMethod::kStatementInsertion: out = StatementInsertion(target, ctx, rng); break;
    }
    if (grammar::Unparse(out) != before) return out;
  }
  throw MutationFailed("mutation did not change the program");
}

}  // namespace specdiff::generator
