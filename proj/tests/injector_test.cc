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

#include <algorithm>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "injector/conformance_test.h"
#include "injector/inject.h"
#include "spec/bugs.h"
#include "spec/interpreter.h"

namespace specdiff::injector {
namespace {

ConformanceTest InjectSource(const std::string& src, spec::EvalOptions opt = {}) {
  return Inject(src, spec::EvaluateSource(src, opt).state);
}

bool HasLine(const ConformanceTest& t, const std::string& line) {
  return std::any_of(t.assertions.begin(), t.assertions.end(),
                     [&](const Assertion& a) { return a.source == line; });
}

TEST(Inject, GoldenAddition) {
  ConformanceTest t = InjectSource("var x = 1 + 2;");
  EXPECT_EQ(Render(t), "// Normal\nvar x = 1 + 2;\n\n$assert.sameValue(x, 3);\n");
  ASSERT_EQ(t.assertions.size(), 1u);
  EXPECT_EQ(t.assertions[0].kind, "VarValue");
  EXPECT_EQ(t.assertions[0].id, "VarValue#1");
}

TEST(Inject, EmptyBody) {
  ConformanceTest t = InjectSource("");
  EXPECT_EQ(Render(t), "// Normal\n");
}

TEST(Inject, RepresentativePaths) {
  ConformanceTest t = InjectSource("var x = {}; var y = {}; var z = {p: x, q: y};");
  EXPECT_TRUE(HasLine(t, "$assert.sameValue(z.p, x);"));
  EXPECT_TRUE(HasLine(t, "$assert.sameValue(z.q, y);"));
}

TEST(Inject, CyclesUseTheRepresentativePath) {
  ConformanceTest t = InjectSource("var c = {}; c.self = c;");
  EXPECT_TRUE(HasLine(t, "$assert.sameValue(c.self, c);"));
  for (const Assertion& a : t.assertions) EXPECT_EQ(a.source.find("c.self.self"), std::string::npos);
}

TEST(Inject, PropertyAttributes) {
  ConformanceTest t = InjectSource("var x = {p: 42};");
  EXPECT_TRUE(HasLine(t, "$verifyProperty(x, \"p\", {value: 42, writable: true});"));
  ConformanceTest f = InjectSource("var x = freeze({p: 1});");
  EXPECT_TRUE(HasLine(f, "$verifyProperty(x, \"p\", {value: 1, writable: false});"));
}

TEST(Inject, KeyOrder) {
  ConformanceTest t = InjectSource("var x = {p: 0, q: 0};");
  EXPECT_TRUE(HasLine(t, "$assert.compareArray(keys(x), [\"p\", \"q\"]);"));
  ConformanceTest a = InjectSource("var a = [7];");
  EXPECT_TRUE(HasLine(a, "$assert.compareArray(keys(a), [\"0\", \"length\"]);"));
}

TEST(Inject, CallableAndNegativeZero) {
  ConformanceTest t = InjectSource("var f = function() { return 0; }; var y = -0;");
  EXPECT_TRUE(HasLine(t, "$assert.callable(f);"));
  EXPECT_TRUE(HasLine(t, "$assert.sameValue(y, -0);"));
  EXPECT_TRUE(HasLine(t, "$assert.sameValue(1 / y, -Infinity);"));
  ConformanceTest p = InjectSource("var y = 0;");
  EXPECT_TRUE(HasLine(p, "$assert.sameValue(1 / y, Infinity);"));
}

TEST(Inject, ExceptionalRunsAreTagOnly) {
  const std::string flip =
      "var obj = {valueOf: function() { throw \"err\"; }}; var result = 42 == obj;";
  ConformanceTest plain = InjectSource(flip);
  EXPECT_EQ(plain.tag, "Throw");
  EXPECT_TRUE(plain.assertions.empty());

  spec::EvalOptions opt;
  opt.bugs.Enable(spec::SpecBug::kAbruptEq);
  ConformanceTest buggy = InjectSource(flip, opt);
  EXPECT_EQ(buggy.tag, "Normal");
  EXPECT_TRUE(HasLine(buggy, "$assert.sameValue(result, false);"));

  ConformanceTest named = InjectSource("y;");
  EXPECT_EQ(named.tag, "ReferenceError");
  EXPECT_TRUE(named.assertions.empty());
}

TEST(Inject, AbortRendersBodyOnly) {
  spec::EvalOptions opt;
  opt.bugs.Enable(spec::SpecBug::kTypoUpdate);
  ConformanceTest t = InjectSource("var x = 42; x++;", opt);
  EXPECT_EQ(t.tag, "Abort");
  EXPECT_TRUE(t.assertions.empty());
  EXPECT_EQ(Render(t), "// Abort\nvar x = 42; x++;\n");
  EXPECT_EQ(ExecutedSource(t), Render(t));
}

TEST(Inject, BuiltinsAreNotSwept) {
  ConformanceTest t = InjectSource("var x = 1;");
  for (const Assertion& a : t.assertions) {
    EXPECT_EQ(a.source.find("keys,"), std::string::npos);
    EXPECT_EQ(a.source.find("(freeze"), std::string::npos);
  }
}

TEST(Inject, IdsAreCountedPerKind) {
  ConformanceTest t = InjectSource("var a = 1; var b = {p: 2}; var c = 3;");
  std::vector<std::string> var_ids;
  for (const Assertion& a : t.assertions) {
    EXPECT_EQ(a.id.substr(0, a.id.find('#')), a.kind);
    if (a.kind == "VarValue") var_ids.push_back(a.id);
  }
  EXPECT_EQ(var_ids, (std::vector<std::string>{"VarValue#1", "VarValue#2"}));
}

TEST(Literals, Sources) {
  EXPECT_EQ(LiteralSource(spec::Value::Number(-0.0)), "-0");
  EXPECT_EQ(LiteralSource(spec::Value::Number(3)), "3");
  EXPECT_EQ(LiteralSource(spec::Value::String("a\"b")), "\"a\\\"b\"");
  EXPECT_EQ(LiteralSource(spec::Value::Null()), "null");
  EXPECT_EQ(LiteralSource(spec::Value::Undefined()), "undefined");
  EXPECT_EQ(LiteralSource(spec::Value::Bool(true)), "true");
  EXPECT_EQ(MemberPath("x", "p"), "x.p");
  EXPECT_EQ(MemberPath("x", "0"), "x[\"0\"]");
  EXPECT_EQ(MemberPath("x", "a b"), "x[\"a b\"]");
}

TEST(ConformanceTestFile, ParseRoundTrip) {
  for (const char* src : {"var x = 1 + 2;", "var x = {}; var y = {}; var z = {p: x, q: y};",
                          "var f = function() { return 0; }; var y = -0;", "y;", ""}) {
    ConformanceTest t = InjectSource(src);
    ConformanceTest back = ParseTest(Render(t));
    EXPECT_EQ(back, t) << src;
  }
  EXPECT_THROW(ParseTest("var x = 1;\n"), std::invalid_argument);
}

TEST(ConformanceTestFile, AssertionLines) {
  ConformanceTest t = InjectSource("var x = {p: 42};");
  ASSERT_EQ(t.assertions.size(), 2u);
  EXPECT_EQ(AssertionLine(t, 0), 4);
  EXPECT_EQ(AssertionLine(t, 1), 5);
  EXPECT_EQ(AssertionIdAtLine(t, 5), t.assertions[1].id);
  EXPECT_EQ(AssertionIdAtLine(t, 2), "");
}

// Re-running a rendered test on the same semantics reproduces the tag.
TEST(Inject, TagFaithfulness) {
  for (const char* src : {"var x = 1 + 2;", "y;", "throw 1;", "var o = null; o.p;"}) {
    ConformanceTest t = InjectSource(src);
    spec::EvalResult again = spec::EvaluateSource(ExecutedSource(t));
    EXPECT_EQ(spec::TagOf(again.state), t.tag) << src;
    EXPECT_EQ(again.failed_assertion_line, 0) << src;
  }
}

}  // namespace
}  // namespace specdiff::injector
