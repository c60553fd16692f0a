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


// Abstract syntax shared by the reference semantics and the engines. Each
// node remembers the pre-order id of the concrete syntax node it came from
// so evaluation steps can be attributed back to the parse tree.

#ifndef SPECDIFF_LANG_AST_H_
#define SPECDIFF_LANG_AST_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grammar/parser.h"

namespace specdiff::lang {

enum class NodeKind {
  // Statements.
  kVar,
  kExprStmt,
  kIf,
  kWhile,
  kBlock,
  kFunctionDecl,
  kReturn,
  kThrow,
  kBreak,
  kTry,
  // Expressions.
  kAssign,
  kBinary,
  kUnary,
  kUpdate,
  kCall,
  kDot,
  kIndex,
  kIdent,
  kNumber,
  kString,
  kBool,
  kNull,
  kUndefined,
  kObject,
  kArray,
  kFunctionExpr,
};

struct Node;
using NodeRef = std::shared_ptr<const Node>;

struct Function;

struct Property {
  bool computed = false;
  std::string key;   // static key
  NodeRef key_expr;  // computed key
  NodeRef value;
  int id = -1;
};

struct Param {
  std::string name;
  NodeRef init;  // may be null
};

struct Declarator {
  std::string name;
  NodeRef init;  // may be null
};

struct Node {
  NodeKind kind;
  int id = -1;  // concrete syntax node id
  int line = 1;

  std::string op;    // operator of kBinary / kUnary / kUpdate
  std::string name;  // kIdent, kDot member, kTry catch parameter
  std::string str;   // kString decoded value
  double num = 0;    // kNumber
  bool flag = false;  // kBool value; kUpdate prefix form

  // kIf: cond, then, [else]; kWhile: cond, body; kBlock: statements;
  // kExprStmt / kReturn / kThrow: [expr]; kTry: block, handler;
  // kAssign: target, value; kBinary: lhs, rhs; kUnary / kUpdate: operand;
  // kCall: callee, args...; kDot: object; kIndex: object, key;
  // kArray: elements.
  std::vector<NodeRef> kids;
  std::vector<Declarator> decls;   // kVar
  std::vector<Property> props;     // kObject
  std::shared_ptr<const Function> fn;  // kFunctionDecl / kFunctionExpr
};

// A function body or the whole script.
struct Function {
  std::string name;  // "" when anonymous
  bool is_expression = false;
  std::vector<Param> params;
  std::vector<NodeRef> body;
  // Hoisted declarations, in source order, excluding nested functions.
  std::vector<std::string> var_names;
  std::vector<NodeRef> function_decls;
  int id = -1;
  int line = 1;
};

struct Program {
  grammar::NodePtr cst;
  std::shared_ptr<const Function> script;
  // Set when the program violates a static rule; evaluation then reports a
  // SyntaxError before running anything.
  std::optional<std::string> early_error;
};

// Lowers a MiniLang parse tree.
Program Lower(const grammar::NodePtr& cst);

// Parses with the MiniLang grammar and lowers. Throws grammar::ParseFailure.
Program ParseProgram(std::string_view source);

}  // namespace specdiff::lang

#endif  // SPECDIFF_LANG_AST_H_
