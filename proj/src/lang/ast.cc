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


#include "lang/ast.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "grammar/lexer.h"
#include "lang/number.h"

namespace specdiff::lang {
namespace {

using grammar::NodePtr;
using grammar::SyntaxNode;

class Lowerer {
 public:
  explicit Lowerer(const NodePtr& root) {
    int id = 0;
    for (const SyntaxNode* n : grammar::Preorder(root)) ids_[n] = id++;
  }

  Program Run(const NodePtr& root) {
    Program p;
    p.cst = root;
    auto script = std::make_shared<Function>();
    script->id = Id(root);
    scopes_.push_back(script.get());
    StatementList(root->children.at(0), script->body);
    scopes_.pop_back();
    p.script = script;
    p.early_error = early_error_;
    return p;
  }

 private:
  int Id(const NodePtr& n) const { return ids_.at(n.get()); }

  void EarlyError(const std::string& msg, const NodePtr& at) {
    if (!early_error_) early_error_ = msg + " (line " + std::to_string(at->line) + ")";
  }

  std::shared_ptr<Node> Make(NodeKind kind, const NodePtr& cst) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->id = Id(cst);
    n->line = cst->line;
    return n;
  }

  static bool Is(const NodePtr& n, std::string_view production) { return n->production == production; }

  void DeclareVar(const std::string& name) {
    auto& names = scopes_.back()->var_names;
    if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
  }

  void StatementList(const NodePtr& n, std::vector<NodeRef>& out) {
    if (n->alt_index == 1) return;  // empty
    StatementList(n->children[0], out);
    out.push_back(Statement(n->children[1]));
  }

  NodeRef Statement(const NodePtr& wrapper) {
    const NodePtr& n = Is(wrapper, "Statement") ? wrapper->children[0] : wrapper;
    const auto& k = n->children;
    const std::string& p = n->production;
    if (p == "VariableStatement") {
      auto v = Make(NodeKind::kVar, n);
      Declarations(k[1], v->decls);
      return v;
    }
    if (p == "ExpressionStatement") {
      auto s = Make(NodeKind::kExprStmt, n);
      s->kids.push_back(Expr(k[0]));
      return s;
    }
    if (p == "IfStatement") {
      auto s = Make(NodeKind::kIf, n);
      s->kids.push_back(Expr(k[2]));
      s->kids.push_back(Statement(k[4]));
      if (n->alt_index == 1) s->kids.push_back(Statement(k[6]));
      return s;
    }
    if (p == "WhileStatement") {
      auto s = Make(NodeKind::kWhile, n);
      s->kids.push_back(Expr(k[2]));
      ++loop_depth_;
      s->kids.push_back(Statement(k[4]));
      --loop_depth_;
      return s;
    }
    if (p == "Block") {
      auto s = Make(NodeKind::kBlock, n);
      StatementList(k[1], s->kids);
      return s;
    }
    if (p == "FunctionDeclaration") {
      auto s = Make(NodeKind::kFunctionDecl, n);
      s->fn = FunctionOf(n, k[1]->text, false, k[3], k[6]);
      DeclareVar(s->fn->name);
      scopes_.back()->function_decls.push_back(s);
      return s;
    }
    if (p == "ReturnStatement") {
      auto s = Make(NodeKind::kReturn, n);
      if (scopes_.size() < 2) EarlyError("return outside function", n);
      if (n->alt_index == 1) s->kids.push_back(Expr(k[1]));
      return s;
    }
    if (p == "ThrowStatement") {
      auto s = Make(NodeKind::kThrow, n);
      s->kids.push_back(Expr(k[1]));
      return s;
    }
    if (p == "BreakStatement") {
      if (loop_depth_ == 0) EarlyError("break outside loop", n);
      return Make(NodeKind::kBreak, n);
    }
    if (p == "TryStatement") {
      auto s = Make(NodeKind::kTry, n);
      s->kids.push_back(Statement(k[1]));
      s->name = k[4]->text;
      s->kids.push_back(Statement(k[6]));
      return s;
    }
    throw std::logic_error("unexpected statement production " + p);
  }

  void Declarations(const NodePtr& n, std::vector<Declarator>& out) {
    if (Is(n, "VariableDeclarationList")) {
      if (n->alt_index == 1) {
        Declarations(n->children[0], out);
        Declarations(n->children[2], out);
      } else {
        Declarations(n->children[0], out);
      }
      return;
    }
    // VariableDeclaration
    Declarator d;
    d.name = n->children[0]->text;
    if (n->alt_index == 1) d.init = Expr(n->children[1]->children[1]);
    DeclareVar(d.name);
    out.push_back(std::move(d));
  }

  std::shared_ptr<const Function> FunctionOf(const NodePtr& n, const std::string& name, bool is_expr,
                                             const NodePtr& formals, const NodePtr& body) {
    auto fn = std::make_shared<Function>();
    fn->name = name;
    fn->is_expression = is_expr;
    fn->id = Id(n);
    fn->line = n->line;
    scopes_.push_back(fn.get());
    int saved_loops = loop_depth_;
    loop_depth_ = 0;
    if (formals->alt_index == 1) Params(formals->children[0], fn->params);
    std::set<std::string> seen;
    for (const auto& prm : fn->params) {
      if (!seen.insert(prm.name).second) EarlyError("duplicate parameter name " + prm.name, n);
    }
    StatementList(body->children[0], fn->body);
    loop_depth_ = saved_loops;
    scopes_.pop_back();
    return fn;
  }

  void Params(const NodePtr& n, std::vector<Param>& out) {
    if (Is(n, "FormalParameterList")) {
      if (n->alt_index == 1) {
        Params(n->children[0], out);
        Params(n->children[2], out);
      } else {
        Params(n->children[0], out);
      }
      return;
    }
    Param prm;
    prm.name = n->children[0]->text;
    if (n->alt_index == 1) prm.init = Expr(n->children[1]->children[1]);
    out.push_back(std::move(prm));
  }

  static bool IsTarget(const NodeRef& e) {
    return e->kind == NodeKind::kIdent || e->kind == NodeKind::kDot || e->kind == NodeKind::kIndex;
  }

  NodeRef Binary(const NodePtr& n) {
    auto b = Make(NodeKind::kBinary, n);
    b->op = n->children[1]->text;
    b->kids.push_back(Expr(n->children[0]));
    b->kids.push_back(Expr(n->children[2]));
    return b;
  }

  NodeRef Expr(const NodePtr& n) {
    const auto& k = n->children;
    const std::string& p = n->production;
    const int alt = n->alt_index;
    if (p == "Expression" || p == "LeftHandSideExpression") return Expr(k[0]);
    if (p == "AssignmentExpression") {
      if (alt == 0) return Expr(k[0]);
      auto a = Make(NodeKind::kAssign, n);
      a->kids.push_back(Expr(k[0]));
      a->kids.push_back(Expr(k[2]));
      if (!IsTarget(a->kids[0])) EarlyError("invalid assignment target", n);
      return a;
    }
    if (p == "EqualityExpression" || p == "RelationalExpression" || p == "AdditiveExpression" ||
        p == "MultiplicativeExpression") {
      return alt == 0 ? Expr(k[0]) : Binary(n);
    }
    if (p == "UnaryExpression") {
      if (alt == 0) return Expr(k[0]);
      auto u = Make(NodeKind::kUnary, n);
      u->op = k[0]->text;
      u->kids.push_back(Expr(k[1]));
      return u;
    }
    if (p == "UpdateExpression") {
      if (alt == 0) return Expr(k[0]);
      auto u = Make(NodeKind::kUpdate, n);
      u->flag = alt >= 3;
      u->op = u->flag ? k[0]->text : k[1]->text;
      u->kids.push_back(Expr(u->flag ? k[1] : k[0]));
      if (!IsTarget(u->kids[0])) EarlyError("invalid update target", n);
      return u;
    }
    if (p == "MemberExpression" || p == "CallExpression") {
      bool is_call = p == "CallExpression";
      if (!is_call && alt == 0) return Expr(k[0]);
      if (is_call && alt <= 1) {
        auto c = Make(NodeKind::kCall, n);
        c->kids.push_back(Expr(k[0]));
        if (k[1]->alt_index == 1) Arguments(k[1]->children[1], c->kids);
        return c;
      }
      if (k[1]->text == "[") {
        auto e = Make(NodeKind::kIndex, n);
        e->kids.push_back(Expr(k[0]));
        e->kids.push_back(Expr(k[2]));
        return e;
      }
      auto e = Make(NodeKind::kDot, n);
      e->kids.push_back(Expr(k[0]));
      e->name = k[2]->text;
      return e;
    }
    if (p == "PrimaryExpression") return Primary(n);
    throw std::logic_error("unexpected expression production " + p);
  }

  void Arguments(const NodePtr& n, std::vector<NodeRef>& out) {
    if (n->alt_index == 1) {
      Arguments(n->children[0], out);
      out.push_back(Expr(n->children[2]));
    } else {
      out.push_back(Expr(n->children[0]));
    }
  }

  NodeRef Primary(const NodePtr& n) {
    const auto& k = n->children;
    switch (n->alt_index) {
      case 0: {
        auto e = Make(NodeKind::kNumber, n);
        e->num = std::strtod(k[0]->text.c_str(), nullptr);
        return e;
      }
      case 1: {
        auto e = Make(NodeKind::kIdent, n);
        e->name = k[0]->text;
        return e;
      }
      case 2: {
        auto e = Make(NodeKind::kString, n);
        e->str = grammar::DecodeStringLiteral(k[0]->text);
        return e;
      }
      case 3:
      case 4: {
        auto e = Make(NodeKind::kBool, n);
        e->flag = n->alt_index == 3;
        return e;
      }
      case 5: return Make(NodeKind::kNull, n);
      case 6: return Make(NodeKind::kUndefined, n);
      case 7: return Object(k[0]);
      case 8: {
        auto e = Make(NodeKind::kArray, k[0]);
        if (k[0]->alt_index == 1) Arguments(k[0]->children[1], e->kids);
        return e;
      }
      case 9: {
        const NodePtr& f = k[0];
        auto e = Make(NodeKind::kFunctionExpr, f);
        if (f->alt_index == 0) {
          e->fn = FunctionOf(f, "", true, f->children[2], f->children[5]);
        } else {
          e->fn = FunctionOf(f, f->children[1]->text, true, f->children[3], f->children[6]);
        }
        return e;
      }
      default: return Expr(k[1]);
    }
  }

  NodeRef Object(const NodePtr& n) {
    auto o = Make(NodeKind::kObject, n);
    if (n->alt_index == 1) Properties(n->children[1], o->props);
    return o;
  }

  void Properties(const NodePtr& n, std::vector<Property>& out) {
    if (Is(n, "PropertyDefinitionList")) {
      if (n->alt_index == 1) {
        Properties(n->children[0], out);
        Properties(n->children[2], out);
      } else {
        Properties(n->children[0], out);
      }
      return;
    }
    Property prop;
    prop.id = Id(n);
    const NodePtr& name = n->children[0];
    switch (name->alt_index) {
      case 0: prop.key = name->children[0]->text; break;
      case 1: prop.key = grammar::DecodeStringLiteral(name->children[0]->text); break;
      case 2: prop.key = NumberToString(std::strtod(name->children[0]->text.c_str(), nullptr)); break;
      default:
        prop.computed = true;
        prop.key_expr = Expr(name->children[1]);
        break;
    }
    prop.value = Expr(n->children[2]);
    out.push_back(std::move(prop));
  }

  std::map<const SyntaxNode*, int> ids_;
  std::vector<Function*> scopes_;
  int loop_depth_ = 0;
  std::optional<std::string> early_error_;
};

}  // namespace

Program Lower(const grammar::NodePtr& cst) { return Lowerer(cst).Run(cst); }

Program ParseProgram(std::string_view source) {
  return Lower(grammar::Parse(grammar::Grammar::MiniLang(), source));
}

}  // namespace specdiff::lang
