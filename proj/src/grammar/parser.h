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

// Generic parser over any Grammar. It computes, for each (non-terminal,
// position), every reachable end position, keeping the first tree found per
// end, so ambiguous strings resolve by alternative order and left recursion
// is handled by iterating to a fixpoint.

#ifndef SPECDIFF_GRAMMAR_PARSER_H_
#define SPECDIFF_GRAMMAR_PARSER_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "grammar/grammar.h"
#include "grammar/lexer.h"

namespace specdiff::grammar {

struct SyntaxNode;
using NodePtr = std::shared_ptr<const SyntaxNode>;

struct SyntaxNode {
  bool is_terminal = false;
  // Leaves: token text and its kind. Inner nodes: production and alternative.
  std::string text;
  TokenKind token_kind = TokenKind::kPunct;
  int line = 1;
  std::string production;
  int alt_index = -1;
  std::vector<NodePtr> children;
  // Character span in the source the tree was parsed from.
  size_t begin = 0;
  size_t end = 0;

  static NodePtr Leaf(const Token& tok);
  static NodePtr Inner(std::string production, int alt_index, std::vector<NodePtr> children);
};

// Parses `source` from `start` (the grammar's start symbol when empty). The
// whole input must be consumed. Throws ParseFailure.
NodePtr Parse(const Grammar& grammar, std::string_view source, std::string_view start = {});

// Leaf texts in order.
std::vector<std::string> Leaves(const NodePtr& root);
// Canonical source text for a tree.
std::string Unparse(const NodePtr& root);

// Structural equality: productions, alternatives and leaf texts.
bool SameTree(const NodePtr& a, const NodePtr& b);

// Nodes in pre-order; a node's id is its index here.
std::vector<const SyntaxNode*> Preorder(const NodePtr& root);

// Returns a copy of `root` with the node at pre-order `id` replaced.
NodePtr ReplaceNode(const NodePtr& root, size_t id, NodePtr replacement);

// (production, alt_index) pairs used anywhere in the tree.
void CollectAlternatives(const NodePtr& root, std::vector<std::pair<std::string, int>>& out);

}  // namespace specdiff::grammar

#endif  // SPECDIFF_GRAMMAR_PARSER_H_
