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

#include "grammar/parser.h"

#include <algorithm>
#include <climits>
#include <functional>
#include <unordered_map>

#include "grammar/render.h"

namespace specdiff::grammar {
namespace {

class Parser {
 public:
  Parser(const Grammar& g, std::vector<Token> toks) : g_(g), toks_(std::move(toks)) {
    for (const Token& t : toks_) {
      switch (t.kind) {
        case TokenKind::kPunct:
        case TokenKind::kKeyword: classes_.push_back(g_.TerminalClass(t.text)); break;
        case TokenKind::kEnd: classes_.push_back(-1); break;
        default: classes_.push_back(g_.CategoryClass(CategoryOf(t.kind))); break;
      }
    }
    memo_.resize(g_.nonterminals().size() * toks_.size());
  }

  NodePtr Run(const std::string& start) {
    int nt = g_.NonterminalIndex(start);
    if (nt < 0) throw GrammarError("unknown start symbol '" + start + "'");
    int dep = INT_MAX;
    const size_t last = toks_.size() - 1;  // index of the end token
    const auto& ends = ParseNt(nt, 0, &dep);
    for (const Derivation& d : ends) {
      if (d.end == last) return Build(nt, 0, last);
    }
    size_t best = 0;
    for (const Derivation& d : ends) best = std::max<size_t>(best, d.end);
    std::set<std::string> expected = ExpectedNames();
    if (best > furthest_ || (best == furthest_ && expected.empty())) {
      furthest_ = best;
      expected = {"end of input"};
    } else if (best == furthest_) {
      expected.insert("end of input");
    }
    const Token& at = toks_[std::min(furthest_, last)];
    throw ParseFailure(at.offset, expected, at.kind == TokenKind::kEnd ? "end of input" : at.text);
  }

 private:
  // One way to reach `end`: the rule used and the chain of symbol end
  // positions, stored as links in arena_.
  struct Derivation {
    uint32_t end;
    int rule;
    int last_link;
  };
  struct Link {
    uint32_t end;
    int prev;
  };
  struct Entry {
    std::vector<Derivation> ends;
    bool final = false;
    int depth = -1;  // stack depth while in progress
  };

  // Expected-token bookkeeping is kept symbolic (token classes, rules and
  // non-terminals whose first sets apply) and expanded only on failure.
  void Advance(size_t pos) {
    if (pos > furthest_) {
      furthest_ = pos;
      expected_classes_.clear();
      expected_rules_.clear();
      expected_nts_.clear();
    }
  }

  void Fail(size_t pos, int token_class) {
    if (pos < furthest_) return;
    Advance(pos);
    if (token_class >= 0) expected_classes_.push_back(token_class);
  }

  bool Match(const Symbol& s, size_t pos) {
    const Token& t = toks_[pos];
    if (s.kind == SymbolKind::kTerminal) {
      if ((t.kind == TokenKind::kPunct || t.kind == TokenKind::kKeyword) && t.text == s.text) return true;
      if (pos >= furthest_) Fail(pos, g_.TerminalClass(s.text));
      return false;
    }
    if (t.kind != TokenKind::kEnd && CategoryOf(t.kind) == s.text) return true;
    if (pos >= furthest_) Fail(pos, g_.CategoryClass(s.text));
    return false;
  }

  std::set<std::string> ExpectedNames() const {
    std::vector<bool> cls(g_.token_class_count(), false);
    for (int c : expected_classes_) cls[c] = true;
    for (size_t c = 0; c < cls.size(); ++c) {
      for (int r : expected_rules_) cls[c] = cls[c] || g_.RuleCanStart(r, static_cast<int>(c));
      for (int n : expected_nts_) cls[c] = cls[c] || g_.CanStart(n, static_cast<int>(c));
    }
    std::set<std::string> out;
    size_t c = 0;
    for (const auto& t : g_.terminals()) {
      if (cls[c++]) out.insert("\"" + t + "\"");
    }
    for (const auto& cat : {kIdentCategory, kNumberCategory, kStringCategory}) {
      int cc = g_.CategoryClass(cat);
      if (cc >= 0 && cls[cc]) out.insert("<" + std::string(cat) + ">");
    }
    return out;
  }

  static bool HasEnd(const std::vector<Derivation>& ends, uint32_t end) {
    for (const auto& d : ends) {
      if (d.end == end) return true;
    }
    return false;
  }

  std::vector<Derivation> ComputeAlternatives(int nt, size_t pos, int* dep) {
    std::vector<Derivation> result;
    std::vector<int> partial, next;
    for (int ri : g_.RulesForIndex(nt)) {
      if (!g_.RuleCanStart(ri, classes_[pos])) {
        if (pos >= furthest_) {
          Advance(pos);
          expected_rules_.push_back(ri);
        }
        continue;
      }
      const ReductionRule& rule = g_.rules()[ri];
      partial.assign(1, NewLink(static_cast<uint32_t>(pos), -1));
      for (size_t si = 0; si < rule.alternative.size() && !partial.empty(); ++si) {
        const Symbol& sym = rule.alternative[si];
        next.clear();
        auto add = [&](uint32_t end, int prev) {
          for (int l : next) {
            if (arena_[l].end == end) return;
          }
          next.push_back(NewLink(end, prev));
        };
        for (int link : partial) {
          const uint32_t p = arena_[link].end;
          if (sym.kind == SymbolKind::kNonterminal) {
            int child_dep = INT_MAX;
            const auto& child = ParseNt(g_.RuleSymbolIndices(ri)[si], p, &child_dep);
            *dep = std::min(*dep, child_dep);
            for (const Derivation& d : child) add(d.end, link);
          } else if (Match(sym, p)) {
            add(p + 1, link);
          }
        }
        std::swap(partial, next);
      }
      for (int link : partial) {
        if (!HasEnd(result, arena_[link].end)) result.push_back({arena_[link].end, ri, link});
      }
    }
    return result;
  }

  int NewLink(uint32_t end, int prev) {
    arena_.push_back({end, prev});
    return static_cast<int>(arena_.size() - 1);
  }

  // The returned reference stays valid for the parser's lifetime.
  const std::vector<Derivation>& ParseNt(int nt, size_t pos, int* dep) {
    if (!g_.CanStart(nt, classes_[pos])) {
      if (pos >= furthest_) {
        Advance(pos);
        expected_nts_.push_back(nt);
      }
      return kNoEnds;
    }
    Entry& entry = memo_[nt * toks_.size() + pos];
    if (entry.final) return entry.ends;
    if (entry.depth >= 0) {
      recursed_[entry.depth] = true;
      *dep = std::min(*dep, entry.depth);
      return entry.ends;
    }
    const int depth = static_cast<int>(recursed_.size());
    entry.depth = depth;
    recursed_.push_back(false);
    int outer_dep = INT_MAX;
    while (true) {
      recursed_[depth] = false;
      int round_dep = INT_MAX;
      std::vector<Derivation> round = ComputeAlternatives(nt, pos, &round_dep);
      bool grew = false;
      for (const Derivation& d : round) {
        if (!HasEnd(entry.ends, d.end)) {
          entry.ends.push_back(d);
          grew = true;
        }
      }
      if (round_dep < depth) outer_dep = std::min(outer_dep, round_dep);
      if (!grew || !recursed_[depth]) break;
    }
    recursed_.pop_back();
    entry.depth = -1;
    if (outer_dep == INT_MAX) {
      entry.final = true;
    } else {
      *dep = std::min(*dep, outer_dep);
    }
    return entry.ends;
  }

  NodePtr Build(int nt, size_t pos, size_t end) {
    const Derivation* found = nullptr;
    for (const Derivation& d : memo_[nt * toks_.size() + pos].ends) {
      if (d.end == end) {
        found = &d;
        break;
      }
    }
    const ReductionRule& rule = g_.rules()[found->rule];
    std::vector<uint32_t> bounds;
    for (int l = found->last_link; l >= 0; l = arena_[l].prev) bounds.push_back(arena_[l].end);
    std::reverse(bounds.begin(), bounds.end());  // bounds[0] == pos
    std::vector<NodePtr> kids;
    for (size_t si = 0; si < rule.alternative.size(); ++si) {
      if (rule.alternative[si].kind == SymbolKind::kNonterminal) {
        kids.push_back(Build(g_.RuleSymbolIndices(found->rule)[si], bounds[si], bounds[si + 1]));
      } else {
        kids.push_back(SyntaxNode::Leaf(toks_[bounds[si]]));
      }
    }
    auto node = SyntaxNode::Inner(rule.lhs, rule.alt_index, std::move(kids));
    auto* mut = const_cast<SyntaxNode*>(node.get());
    mut->begin = toks_[pos].offset;
    mut->end = end > pos ? toks_[end - 1].offset + toks_[end - 1].text.size() : toks_[pos].offset;
    if (end == pos) mut->line = toks_[pos].line;
    return node;
  }

  static inline const std::vector<Derivation> kNoEnds;

  const Grammar& g_;
  std::vector<Token> toks_;
  std::vector<int> classes_;
  std::vector<Entry> memo_;
  std::vector<Link> arena_;
  std::vector<bool> recursed_;
  size_t furthest_ = 0;
  std::vector<int> expected_classes_;
  std::vector<int> expected_rules_;
  std::vector<int> expected_nts_;
};

}  // namespace

NodePtr SyntaxNode::Leaf(const Token& tok) {
  auto n = std::make_shared<SyntaxNode>();
  n->is_terminal = true;
  n->text = tok.text;
  n->token_kind = tok.kind;
  n->line = tok.line;
  n->begin = tok.offset;
  n->end = tok.offset + tok.text.size();
  return n;
}

NodePtr SyntaxNode::Inner(std::string production, int alt_index, std::vector<NodePtr> children) {
  auto n = std::make_shared<SyntaxNode>();
  n->production = std::move(production);
  n->alt_index = alt_index;
  n->children = std::move(children);
  if (!n->children.empty()) {
    n->begin = n->children.front()->begin;
    n->end = n->children.back()->end;
    n->line = n->children.front()->line;
  }
  return n;
}

NodePtr Parse(const Grammar& grammar, std::string_view source, std::string_view start) {
  Parser parser(grammar, Tokenize(grammar, source));
  return parser.Run(start.empty() ? grammar.start() : std::string(start));
}

std::vector<std::string> Leaves(const NodePtr& root) {
  std::vector<std::string> out;
  std::function<void(const SyntaxNode&)> walk = [&](const SyntaxNode& n) {
    if (n.is_terminal) {
      out.push_back(n.text);
      return;
    }
    for (const auto& c : n.children) walk(*c);
  };
  walk(*root);
  return out;
}

std::string Unparse(const NodePtr& root) { return RenderTokens(Leaves(root)); }

bool SameTree(const NodePtr& a, const NodePtr& b) {
  if (a->is_terminal != b->is_terminal) return false;
  if (a->is_terminal) return a->text == b->text;
  if (a->production != b->production || a->alt_index != b->alt_index) return false;
  if (a->children.size() != b->children.size()) return false;
  for (size_t i = 0; i < a->children.size(); ++i) {
    if (!SameTree(a->children[i], b->children[i])) return false;
  }
  return true;
}

std::vector<const SyntaxNode*> Preorder(const NodePtr& root) {
  std::vector<const SyntaxNode*> out;
  std::function<void(const SyntaxNode*)> walk = [&](const SyntaxNode* n) {
    out.push_back(n);
    for (const auto& c : n->children) walk(c.get());
  };
  walk(root.get());
  return out;
}

NodePtr ReplaceNode(const NodePtr& root, size_t id, NodePtr replacement) {
  size_t counter = 0;
  std::function<NodePtr(const NodePtr&)> walk = [&](const NodePtr& n) -> NodePtr {
    size_t mine = counter++;
    if (mine == id) {
      // Skip the ids of the replaced subtree.
      counter += Preorder(n).size() - 1;
      return replacement;
    }
    if (n->is_terminal || id < mine) {
      counter += Preorder(n).size() - 1;
      return n;
    }
    std::vector<NodePtr> kids;
    bool changed = false;
    for (const auto& c : n->children) {
      kids.push_back(walk(c));
      changed |= kids.back() != c;
    }
    if (!changed) return n;
    return SyntaxNode::Inner(n->production, n->alt_index, std::move(kids));
  };
  return walk(root);
}

void CollectAlternatives(const NodePtr& root, std::vector<std::pair<std::string, int>>& out) {
  if (root->is_terminal) return;
  out.emplace_back(root->production, root->alt_index);
  for (const auto& c : root->children) CollectAlternatives(c, out);
}

}  // namespace specdiff::grammar
