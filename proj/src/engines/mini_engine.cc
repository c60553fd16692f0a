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

#include "engines/mini_engine.h"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "grammar/lexer.h"
#include "lang/number.h"
#include "spec/state.h"

namespace specdiff::engines {
namespace {

using lang::Node;
using lang::NodeKind;
using spec::HeapObject;
using spec::PropertySlot;
using spec::Value;
using spec::ValueKind;

enum class Native {
  kNone,
  kSameValue,
  kCompareArray,
  kCallable,
  kVerifyProperty,
  kKeys,
  kFreeze,
  kArr,
  kIndexOf,
};

struct Object {
  HeapObject data;
  Native native = Native::kNone;
  const lang::Function* fn = nullptr;
  int scope = -1;
};

struct Slot {
  std::string name;
  Value value;
  bool ready = true;
  bool constant = false;
};

struct Scope {
  int parent;
  std::vector<Slot> slots;
};

// A MiniLang `throw` in flight.
struct JsThrow {
  Value value;
};
struct OutOfResources {};

enum class Flow { kNormal, kBreak, kReturn };

class Engine {
 public:
  Engine(const EngineBugCatalog& bugs, const ExecLimits& limits) : bugs_(bugs), limits_(limits) {}

  ExecOutcome Run(const lang::Program& program);

 private:
  void Tick() {
    if (++steps_ > limits_.max_steps) throw OutOfResources{};
  }
  [[noreturn]] void Fail(const char* name) {
    int o = Alloc();
    objects_[o].data.is_error = true;
    objects_[o].data.properties.push_back({"name", Value::String(name), true});
    throw JsThrow{Value::Object(o)};
  }
  int Alloc() {
    objects_.emplace_back();
    return static_cast<int>(objects_.size()) - 1;
  }
  Value Num(double d) const {
    if (bugs_.Has(EngineBug::kNegZeroLost) && d == 0) d = 0;
    return Value::Number(d);
  }
  bool Callable(const Value& v) const { return v.IsObject() && objects_[v.object].data.callable; }
  HeapObject& Data(const Value& v) { return objects_[v.object].data; }

  Slot* Lookup(const std::string& name, int scope) {
    for (int s = scope; s >= 0; s = scopes_[s].parent)
      for (auto& slot : scopes_[s].slots)
        if (slot.name == name) return &slot;
    return nullptr;
  }
  Slot* Own(int scope, const std::string& name) {
    for (auto& slot : scopes_[scope].slots)
      if (slot.name == name) return &slot;
    return nullptr;
  }

  void Setup();
  int NativeFunction(Native n, const char* name, int length);
  void Hoist(const lang::Function& fn, int scope);

  Flow ExecList(const std::vector<lang::NodeRef>& list);
  Flow Exec(const Node& n);
  Value Eval(const Node& n);
  Value Read(const std::string& name);
  void Write(const std::string& name, Slot* slot, const Value& v);
  Value GetMember(const Value& base, const std::string& key);
  void SetMember(const Value& base, const std::string& key, const Value& v);
  std::pair<Value, std::string> EvalTarget(const Node& n);
  Value MakeFunction(const lang::Function& fn, int scope);
  Value Invoke(const Value& f, std::vector<Value> args);
  Value InvokeNative(Native n, const std::vector<Value>& args);
  Value Assertion();

  Value Primitive(const Value& v, bool string_first);
  double Number(const Value& v);
  std::string String(const Value& v);
  static bool Truthy(const Value& v);
  std::string Key(const Value& v) { return String(Primitive(v, true)); }
  bool LooseEquals(Value x, Value y);
  static bool StrictEquals(const Value& x, const Value& y);

  const EngineBugCatalog& bugs_;
  ExecLimits limits_;
  int64_t steps_ = 0;
  int depth_ = 0;
  int scope_ = 0;
  int line_ = 0;
  int assertion_line_ = 0;
  Value return_value_;
  std::vector<Object> objects_;
  std::vector<Scope> scopes_;
};

std::string IndexName(size_t i) { return std::to_string(i); }

void Engine::Setup() {
  scopes_.push_back({-1, {}});
  int a = Alloc();
  const std::pair<const char*, Native> kAssert[] = {
      {"sameValue", Native::kSameValue},
      {"compareArray", Native::kCompareArray},
      {"callable", Native::kCallable}};
  for (const auto& [name, n] : kAssert) {
    int f = NativeFunction(n, name, n == Native::kCallable ? 1 : 2);
    objects_[a].data.properties.push_back({name, Value::Object(f), true});
  }
  auto& globals = scopes_[0].slots;
  globals.push_back({"$assert", Value::Object(a)});
  globals.push_back({"$verifyProperty", Value::Object(NativeFunction(Native::kVerifyProperty, "$verifyProperty", 3))});
  globals.push_back({"keys", Value::Object(NativeFunction(Native::kKeys, "keys", 1))});
  globals.push_back({"freeze", Value::Object(NativeFunction(Native::kFreeze, "freeze", 1))});
  globals.push_back({"arr", Value::Object(NativeFunction(Native::kArr, "arr", 0))});
  globals.push_back({"indexOf", Value::Object(NativeFunction(Native::kIndexOf, "indexOf", 2))});
  globals.push_back({"Infinity", Value::Number(INFINITY), true, true});
  globals.push_back({"NaN", Value::Number(NAN), true, true});
}

int Engine::NativeFunction(Native n, const char* name, int length) {
  int f = Alloc();
  objects_[f].native = n;
  objects_[f].data.callable = true;
  objects_[f].data.properties.push_back({"length", Value::Number(length), false});
  objects_[f].data.properties.push_back({"name", Value::String(name), false});
  return f;
}

void Engine::Hoist(const lang::Function& fn, int scope) {
  for (const auto& name : fn.var_names)
    if (!Own(scope, name)) scopes_[scope].slots.push_back({name, Value::Undefined()});
  for (const auto& decl : fn.function_decls) {
    Value f = MakeFunction(*decl->fn, scope);
    if (Slot* s = Own(scope, decl->fn->name)) {
      s->value = f;
      s->ready = true;
    } else {
      scopes_[scope].slots.push_back({decl->fn->name, f});
    }
  }
}

ExecOutcome Engine::Run(const lang::Program& program) {
  Setup();
  ExecOutcome out;
  if (program.early_error) {
    out.kind = ExecOutcome::Kind::kError;
    out.error_name = "SyntaxError";
    out.detail = *program.early_error;
    return out;
  }
  try {
    Hoist(*program.script, 0);
    ExecList(program.script->body);
  } catch (const JsThrow& t) {
    const Value& v = t.value;
    if (v.IsObject() && Data(v).is_error) {
      out.kind = ExecOutcome::Kind::kError;
      const PropertySlot* name = Data(v).Find("name");
      out.error_name = name && name->value.kind == ValueKind::kString ? name->value.string : "Error";
      out.failed_assertion_line = assertion_line_;
    } else {
      out.kind = ExecOutcome::Kind::kThrow;
      out.detail = spec::Describe(v);
    }
  } catch (const OutOfResources&) {
    out.kind = ExecOutcome::Kind::kResourceLimit;
    out.detail = "resource limit";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Statements

Flow Engine::ExecList(const std::vector<lang::NodeRef>& list) {
  for (const auto& s : list) {
    Flow f = Exec(*s);
    if (f != Flow::kNormal) return f;
  }
  return Flow::kNormal;
}

Flow Engine::Exec(const Node& n) {
  Tick();
  switch (n.kind) {
    case NodeKind::kVar:
      for (const auto& d : n.decls) {
        Slot* slot = Lookup(d.name, scope_);
        if (d.init) Write(d.name, slot, Eval(*d.init));
      }
      return Flow::kNormal;
    case NodeKind::kExprStmt:
      Eval(*n.kids[0]);
      return Flow::kNormal;
    case NodeKind::kIf:
      if (Truthy(Eval(*n.kids[0]))) return Exec(*n.kids[1]);
      if (n.kids.size() > 2) return Exec(*n.kids[2]);
      return Flow::kNormal;
    case NodeKind::kWhile:
      while (Truthy(Eval(*n.kids[0]))) {
        Flow f = Exec(*n.kids[1]);
        if (f == Flow::kBreak) break;
        if (f == Flow::kReturn) return f;
      }
      return Flow::kNormal;
    case NodeKind::kBlock:
      return ExecList(n.kids);
    case NodeKind::kFunctionDecl:
      return Flow::kNormal;
    case NodeKind::kReturn:
      return_value_ = n.kids.empty() ? Value::Undefined() : Eval(*n.kids[0]);
      return Flow::kReturn;
    case NodeKind::kThrow:
      throw JsThrow{Eval(*n.kids[0])};
    case NodeKind::kBreak:
      return Flow::kBreak;
    case NodeKind::kTry: {
      int saved_scope = scope_;
      int saved_depth = depth_;
      try {
        return Exec(*n.kids[0]);
      } catch (const JsThrow& t) {
        scope_ = saved_scope;
        depth_ = saved_depth;
        scopes_.push_back({scope_, {{n.name, t.value}}});
        scope_ = static_cast<int>(scopes_.size()) - 1;
        Flow f;
        try {
          f = Exec(*n.kids[1]);
        } catch (...) {
          scope_ = saved_scope;
          throw;
        }
        scope_ = saved_scope;
        return f;
      }
    }
    default:
      throw std::logic_error("unexpected statement kind");
  }
}

// ---------------------------------------------------------------------------
// Expressions

Value Engine::Read(const std::string& name) {
  Slot* slot = Lookup(name, scope_);
  if (!slot) Fail("ReferenceError");
  if (!slot->ready) {
    if (bugs_.Has(EngineBug::kUninitParamUndefined)) return Value::Undefined();
    Fail("ReferenceError");
  }
  return slot->value;
}

void Engine::Write(const std::string& name, Slot* slot, const Value& v) {
  (void)name;
  if (!slot) Fail("ReferenceError");
  if (slot->constant) Fail("TypeError");
  if (!slot->ready) Fail("ReferenceError");
  slot->value = v;
}

Value Engine::GetMember(const Value& base, const std::string& key) {
  if (base.kind == ValueKind::kString) {
    const std::string& s = base.string;
    if (key == "length") return Value::Number(static_cast<double>(s.size()));
    for (size_t i = 0; i < s.size(); ++i)
      if (key == IndexName(i)) return Value::String(s.substr(i, 1));
    return Value::Undefined();
  }
  if (!base.IsObject()) return Value::Undefined();
  const PropertySlot* p = Data(base).Find(key);
  return p ? p->value : Value::Undefined();
}

void Engine::SetMember(const Value& base, const std::string& key, const Value& v) {
  if (!base.IsObject()) Fail("TypeError");
  HeapObject& o = Data(base);
  if (PropertySlot* p = o.Find(key)) {
    if (!p->writable) {
      if (o.frozen && bugs_.Has(EngineBug::kFrozenWriteSilent)) return;
      Fail("TypeError");
    }
    p->value = v;
    return;
  }
  if (o.frozen) {
    if (bugs_.Has(EngineBug::kFrozenWriteSilent)) return;
    Fail("TypeError");
  }
  o.properties.push_back({key, v, true});
}

// Base value and key of a member expression.
std::pair<Value, std::string> Engine::EvalTarget(const Node& n) {
  Value base = Eval(*n.kids[0]);
  Value key = n.kind == NodeKind::kIndex ? Eval(*n.kids[1]) : Value::String(n.name);
  if (base.kind == ValueKind::kUndefined || base.kind == ValueKind::kNull) Fail("TypeError");
  return {base, Key(key)};
}

Value Engine::MakeFunction(const lang::Function& fn, int scope) {
  int f = Alloc();
  objects_[f].fn = &fn;
  objects_[f].scope = scope;
  objects_[f].data.callable = true;
  double length = 0;
  while (length < fn.params.size() && !fn.params[static_cast<size_t>(length)].init) ++length;
  objects_[f].data.properties.push_back({"length", Value::Number(length), false});
  objects_[f].data.properties.push_back({"name", Value::String(fn.name), false});
  return Value::Object(f);
}

Value Engine::Eval(const Node& n) {
  Tick();
  switch (n.kind) {
    case NodeKind::kNumber:
      return Value::Number(n.num);
    case NodeKind::kString:
      return Value::String(n.str);
    case NodeKind::kBool:
      return Value::Bool(n.flag);
    case NodeKind::kNull:
      return Value::Null();
    case NodeKind::kUndefined:
      return Value::Undefined();
    case NodeKind::kIdent:
      return Read(n.name);
    case NodeKind::kDot:
    case NodeKind::kIndex: {
      auto [base, key] = EvalTarget(n);
      return GetMember(base, key);
    }
    case NodeKind::kAssign: {
      const Node& target = *n.kids[0];
      if (target.kind == NodeKind::kIdent) {
        Slot* slot = Lookup(target.name, scope_);
        Value v = Eval(*n.kids[1]);
        Write(target.name, slot, v);
        return v;
      }
      auto [base, key] = EvalTarget(target);
      Value v = Eval(*n.kids[1]);
      SetMember(base, key, v);
      return v;
    }
    case NodeKind::kUpdate: {
      const Node& target = *n.kids[0];
      double delta = n.op == "++" ? 1 : -1;
      if (target.kind == NodeKind::kIdent) {
        Slot* slot = Lookup(target.name, scope_);
        double old = Number(Read(target.name));
        Value next = Num(old + delta);
        Write(target.name, slot, next);
        return n.flag ? next : Value::Number(old);
      }
      auto [base, key] = EvalTarget(target);
      double old = Number(GetMember(base, key));
      Value next = Num(old + delta);
      SetMember(base, key, next);
      return n.flag ? next : Value::Number(old);
    }
    case NodeKind::kUnary: {
      Value v = Eval(*n.kids[0]);
      if (n.op == "-") return Num(-Number(v));
      return Value::Bool(!Truthy(v));
    }
    case NodeKind::kBinary: {
      Value l = Eval(*n.kids[0]);
      Value r = Eval(*n.kids[1]);
      const std::string& op = n.op;
      if (op == "===") return Value::Bool(StrictEquals(l, r));
      if (op == "==") return Value::Bool(LooseEquals(l, r));
      if (op == "<") {
        Value pl = Primitive(l, false);
        Value pr = Primitive(r, false);
        if (pl.kind == ValueKind::kString && pr.kind == ValueKind::kString)
          return Value::Bool(pl.string < pr.string);
        double a = Number(pl), b = Number(pr);
        return Value::Bool(a < b);  // false when either is NaN
      }
      if (op == "+") {
        Value pl = Primitive(l, false);
        Value pr = Primitive(r, false);
        if (pl.kind == ValueKind::kString || pr.kind == ValueKind::kString)
          return Value::String(String(pl) + String(pr));
        return Num(Number(pl) + Number(pr));
      }
      double a = Number(l);
      double b = Number(r);
      if (op == "-") return Num(a - b);
      if (op == "*") return Num(a * b);
      return Num(a / b);
    }
    case NodeKind::kCall: {
      Value f = Eval(*n.kids[0]);
      std::vector<Value> args;
      for (size_t i = 1; i < n.kids.size(); ++i) args.push_back(Eval(*n.kids[i]));
      if (!Callable(f)) Fail("TypeError");
      line_ = n.line;
      return Invoke(f, std::move(args));
    }
    case NodeKind::kObject: {
      int o = Alloc();
      for (const auto& p : n.props) {
        std::string key = p.computed ? Key(Eval(*p.key_expr)) : p.key;
        Value v = Eval(*p.value);
        auto& props = objects_[o].data.properties;
        bool replaced = false;
        for (auto& slot : props) {
          if (slot.key == key) {
            slot.value = v;
            slot.writable = true;
            replaced = true;
          }
        }
        if (!replaced) props.push_back({key, v, true});
      }
      return Value::Object(o);
    }
    case NodeKind::kArray: {
      std::vector<Value> items;
      for (const auto& k : n.kids) items.push_back(Eval(*k));
      int o = Alloc();
      auto& props = objects_[o].data.properties;
      Value length = Value::Number(static_cast<double>(items.size()));
      if (bugs_.Has(EngineBug::kKeyorderEngine)) props.push_back({"length", length, true});
      for (size_t i = 0; i < items.size(); ++i) props.push_back({IndexName(i), items[i], true});
      if (!bugs_.Has(EngineBug::kKeyorderEngine)) props.push_back({"length", length, true});
      return Value::Object(o);
    }
    case NodeKind::kFunctionExpr: {
      if (n.fn->name.empty()) return MakeFunction(*n.fn, scope_);
      scopes_.push_back({scope_, {{n.fn->name, Value::Undefined(), true, true}}});
      int own = static_cast<int>(scopes_.size()) - 1;
      Value f = MakeFunction(*n.fn, own);
      scopes_[own].slots[0].value = f;
      return f;
    }
    default:
      throw std::logic_error("unexpected expression kind");
  }
}

Value Engine::Invoke(const Value& f, std::vector<Value> args) {
  const Object& callee = objects_[f.object];
  if (callee.native != Native::kNone) return InvokeNative(callee.native, args);
  if (depth_ >= limits_.max_call_depth) throw OutOfResources{};
  const lang::Function& fn = *callee.fn;
  scopes_.push_back({callee.scope, {}});
  int scope = static_cast<int>(scopes_.size()) - 1;
  for (const auto& p : fn.params) scopes_[scope].slots.push_back({p.name, {}, false, false});
  int saved = scope_;
  scope_ = scope;
  ++depth_;
  struct Restore {
    Engine* e;
    int scope;
    ~Restore() {
      e->scope_ = scope;
      --e->depth_;
    }
  } restore{this, saved};
  for (size_t i = 0; i < fn.params.size(); ++i) {
    Value v = i < args.size() ? args[i] : Value::Undefined();
    if (v.kind == ValueKind::kUndefined && fn.params[i].init) v = Eval(*fn.params[i].init);
    Slot* slot = Own(scope, fn.params[i].name);
    slot->value = v;
    slot->ready = true;
  }
  Hoist(fn, scope);
  if (ExecList(fn.body) == Flow::kReturn) return std::move(return_value_);
  return Value::Undefined();
}

Value Engine::Assertion() {
  if (assertion_line_ == 0) assertion_line_ = line_;
  Fail("AssertionError");
}

Value Engine::InvokeNative(Native n, const std::vector<Value>& args) {
  auto arg = [&](size_t i) { return i < args.size() ? args[i] : Value::Undefined(); };
  switch (n) {
    case Native::kSameValue:
      if (!spec::SameValue(arg(0), arg(1))) Assertion();
      return Value::Undefined();
    case Native::kCallable:
      if (!Callable(arg(0))) Assertion();
      return Value::Undefined();
    case Native::kCompareArray: {
      Value a = arg(0), b = arg(1);
      if (!a.IsObject() || !b.IsObject()) Assertion();
      Value la = GetMember(a, "length"), lb = GetMember(b, "length");
      if (!Data(a).Find("length") || !Data(b).Find("length") || !spec::SameValue(la, lb))
        Assertion();
      double len = la.kind == ValueKind::kNumber ? la.number : 0;
      if (!(len >= 0 && len <= 1e6)) Assertion();
      for (size_t i = 0; i < static_cast<size_t>(len); ++i)
        if (!spec::SameValue(GetMember(a, IndexName(i)), GetMember(b, IndexName(i)))) Assertion();
      return Value::Undefined();
    }
    case Native::kVerifyProperty: {
      Value o = arg(0), key = arg(1), desc = arg(2);
      if (!o.IsObject() || key.kind != ValueKind::kString) Assertion();
      const PropertySlot* p = Data(o).Find(key.string);
      if (!p) Assertion();
      if (desc.IsObject()) {
        const PropertySlot* value = Data(desc).Find("value");
        if (value && !spec::SameValue(value->value, p->value)) Assertion();
        const PropertySlot* writable = Data(desc).Find("writable");
        if (writable) {
          bool want = writable->value.kind == ValueKind::kBoolean && writable->value.boolean;
          if (want != p->writable) Assertion();
        }
      }
      return Value::Undefined();
    }
    case Native::kKeys: {
      Value o = arg(0);
      if (!o.IsObject()) Fail("TypeError");
      std::vector<std::string> names;
      for (const auto& p : Data(o).properties) names.push_back(p.key);
      int out = Alloc();
      auto& props = objects_[out].data.properties;
      for (size_t i = 0; i < names.size(); ++i) props.push_back({IndexName(i), Value::String(names[i]), true});
      props.push_back({"length", Value::Number(static_cast<double>(names.size())), true});
      return Value::Object(out);
    }
    case Native::kFreeze: {
      Value o = arg(0);
      if (!o.IsObject()) return o;
      for (auto& p : Data(o).properties) p.writable = false;
      Data(o).frozen = true;
      return o;
    }
    case Native::kArr: {
      int out = Alloc();
      auto& props = objects_[out].data.properties;
      for (size_t i = 0; i < args.size(); ++i) props.push_back({IndexName(i), args[i], true});
      props.push_back({"length", Value::Number(static_cast<double>(args.size())), true});
      return Value::Object(out);
    }
    case Native::kIndexOf: {
      Value o = arg(0);
      if (!o.IsObject()) Fail("TypeError");
      double len = Number(GetMember(o, "length"));
      len = std::isnan(len) || len <= 0 ? 0 : std::floor(len);
      if (len == 0) return Value::Number(-1);
      double from = Number(arg(2));
      double k = std::isnan(from) ? 0 : std::trunc(from);
      if (k < 0) k = std::max(len + k, 0.0);
      for (; k < len; k += 1) {
        Tick();
        const PropertySlot* p = Data(o).Find(lang::NumberToString(k));
        if (p && StrictEquals(arg(1), p->value)) return Value::Number(k);
      }
      return Value::Number(-1);
    }
    case Native::kNone:
      break;
  }
  throw std::logic_error("not a native function");
}

// ---------------------------------------------------------------------------
// Conversions

Value Engine::Primitive(const Value& v, bool string_first) {
  if (!v.IsObject()) return v;
  const char* first = string_first ? "toString" : "valueOf";
  const char* second = string_first ? "valueOf" : "toString";
  bool found = false;
  for (const char* name : {first, second}) {
    Value m = GetMember(v, name);
    if (!Callable(m)) continue;
    found = true;
    Value r = Invoke(m, {});
    if (!r.IsObject()) return r;
  }
  if (found) Fail("TypeError");
  return Value::String(Data(v).callable ? "[object Function]" : "[object Object]");
}

double Engine::Number(const Value& v) {
  switch (v.kind) {
    case ValueKind::kUndefined: return NAN;
    case ValueKind::kNull: return 0;
    case ValueKind::kBoolean: return v.boolean ? 1 : 0;
    case ValueKind::kNumber: return v.number;
    case ValueKind::kString: return lang::StringToNumber(v.string);
    case ValueKind::kObject: return Number(Primitive(v, false));
  }
  return NAN;
}

std::string Engine::String(const Value& v) {
  switch (v.kind) {
    case ValueKind::kUndefined: return "undefined";
    case ValueKind::kNull: return "null";
    case ValueKind::kBoolean: return v.boolean ? "true" : "false";
    case ValueKind::kNumber: return lang::NumberToString(v.number);
    case ValueKind::kString: return v.string;
    case ValueKind::kObject: return String(Primitive(v, true));
  }
  return "";
}

bool Engine::Truthy(const Value& v) {
  switch (v.kind) {
    case ValueKind::kUndefined:
    case ValueKind::kNull: return false;
    case ValueKind::kBoolean: return v.boolean;
    case ValueKind::kNumber: return v.number != 0 && !std::isnan(v.number);
    case ValueKind::kString: return !v.string.empty();
    case ValueKind::kObject: return true;
  }
  return false;
}

bool Engine::StrictEquals(const Value& x, const Value& y) {
  if (x.kind != y.kind) return false;
  if (x.kind == ValueKind::kNumber) return x.number == y.number;
  return spec::SameValue(x, y);
}

bool Engine::LooseEquals(Value x, Value y) {
  const bool string_first = bugs_.Has(EngineBug::kEqCoerceWrong);
  for (;;) {
    if (x.kind == y.kind) return StrictEquals(x, y);
    auto nullish = [](const Value& v) {
      return v.kind == ValueKind::kNull || v.kind == ValueKind::kUndefined;
    };
    if (nullish(x) && nullish(y)) return true;
    auto scalar = [](const Value& v) {
      return v.kind == ValueKind::kNumber || v.kind == ValueKind::kString;
    };
    if (x.kind == ValueKind::kNumber && y.kind == ValueKind::kString) {
      y = Value::Number(Number(y));
    } else if (x.kind == ValueKind::kString && y.kind == ValueKind::kNumber) {
      x = Value::Number(Number(x));
    } else if (x.kind == ValueKind::kBoolean) {
      x = Value::Number(Number(x));
    } else if (y.kind == ValueKind::kBoolean) {
      y = Value::Number(Number(y));
    } else if (scalar(x) && y.IsObject()) {
      y = Primitive(y, string_first);
    } else if (x.IsObject() && scalar(y)) {
      x = Primitive(x, string_first);
    } else {
      return false;
    }
  }
}

}  // namespace

ExecOutcome RunMiniEngine(const lang::Program& program, const EngineBugCatalog& bugs,
                          const ExecLimits& limits) {
  Engine engine(bugs, limits);
  return engine.Run(program);
}

ExecOutcome RunMiniEngineSource(std::string_view source, const EngineBugCatalog& bugs,
                                const ExecLimits& limits) {
  lang::Program program;
  try {
    program = lang::ParseProgram(source);
  } catch (const grammar::ParseFailure& e) {
    ExecOutcome out;
    out.kind = ExecOutcome::Kind::kError;
    out.error_name = "SyntaxError";
    out.detail = e.what();
    return out;
  }
  return RunMiniEngine(program, bugs, limits);
}

}  // namespace specdiff::engines
