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


#include <gtest/gtest.h>

#include <set>

#include "grammar/grammar.h"
#include "grammar/lexer.h"
#include "grammar/parser.h"
#include "grammar/render.h"
#include "grammar/shortest.h"
#include "grammar/syntax_coverage.h"
#include "grammar/synthesize.h"

namespace specdiff::grammar {
namespace {

constexpr std::string_view kMemberGrammar = R"g(%start MemberExpression
%lex ident x
MemberExpression ::= PrimaryExpression | MemberExpression "[" Expression "]" | MemberExpression "." <ident> | "new" MemberExpression Arguments
PrimaryExpression ::= <ident> | "(" Expression ")"
Expression ::= AssignmentExpression
AssignmentExpression ::= <ident>
Arguments ::= "(" ")" | "(" ArgumentList ")"
ArgumentList ::= AssignmentExpression | "..." AssignmentExpression | AssignmentExpression ","
)g";

TEST(GrammarText, ParsesRulesAndAlternatives) {
  Grammar g = Grammar::FromText(kMemberGrammar);
  EXPECT_EQ(g.start(), "MemberExpression");
  EXPECT_EQ(g.RulesFor("MemberExpression").size(), 4u);
  EXPECT_EQ(g.RulesFor("Arguments").size(), 2u);
  EXPECT_TRUE(g.IsKeyword("new"));
  EXPECT_FALSE(g.IsKeyword("..."));
}

TEST(GrammarText, RejectsNonProductiveGrammar) {
  EXPECT_THROW(Grammar::FromText("%start A\nA ::= A \"x\"\n"), NonProductiveGrammar);
}

TEST(GrammarText, RejectsUndefinedNonterminal) {
  EXPECT_THROW(Grammar::FromText("%start A\nA ::= B\n"), GrammarError);
}

TEST(ShortestStrings, MemberExpressionExample) {
  auto m = ShortestStrings(Grammar::FromText(kMemberGrammar));
  EXPECT_EQ(m.Text("Arguments"), "()");
  for (const char* nt : {"MemberExpression", "PrimaryExpression", "Expression",
                         "AssignmentExpression", "ArgumentList"})
    EXPECT_EQ(m.Text(nt), "x") << nt;
}

TEST(ShortestStrings, EpsilonHasLengthZero) {
  auto m = ShortestStrings(Grammar::FromText("%start L\nL ::= L \";\" | %empty\n"));
  EXPECT_TRUE(m.Tokens("L").empty());
}

TEST(ShortestStrings, EveryMiniLangEntryParsesFromItsNonterminal) {
  const Grammar& g = Grammar::MiniLang();
  auto m = ShortestStrings(g);
  for (const auto& nt : g.nonterminals()) {
    ASSERT_TRUE(m.Has(nt)) << nt;
    EXPECT_NO_THROW(Parse(g, m.Text(nt), nt)) << nt << ": " << m.Text(nt);
  }
}

TEST(ShortestStrings, Deterministic) {
  const Grammar& g = Grammar::MiniLang();
  EXPECT_EQ(ShortestStrings(g).entries(), ShortestStrings(g).entries());
}

TEST(NonRecursiveSynthesize, NewAlternativePadsWithShortestStrings) {
  Grammar g = Grammar::FromText(kMemberGrammar);
  std::vector<std::string> with_new;
  for (const auto& s : NonRecursiveSynthesize(g, "MemberExpression"))
    if (s.rfind("new", 0) == 0) with_new.push_back(s);
  EXPECT_EQ(with_new,
            (std::vector<std::string>{"new x()", "new x(x)", "new x(...x)", "new x(x,)"}));
}

TEST(NonRecursiveSynthesize, OutputsParseBackFromTheStartSymbol) {
  Grammar g = Grammar::FromText(kMemberGrammar);
  for (const auto& s : NonRecursiveSynthesize(g, "MemberExpression")) {
    NodePtr tree = Parse(g, s, "MemberExpression");
    EXPECT_EQ(tree->production, "MemberExpression") << s;
  }
}

TEST(NonRecursiveSynthesize, MiniLangStatementsParse) {
  const Grammar& g = Grammar::MiniLang();
  auto out = NonRecursiveSynthesize(g, "Statement");
  ASSERT_FALSE(out.empty());
  std::set<std::string> unique(out.begin(), out.end());
  EXPECT_EQ(unique.size(), out.size());
  for (size_t i = 0; i < out.size(); i += 97) EXPECT_NO_THROW(Parse(g, out[i], "Statement")) << out[i];
}

TEST(BuiltinSynthesis, ArityRange) {
  auto m = ShortestStrings(Grammar::MiniLang());
  BuiltinSignature sig{"indexOf", ReceiverKind::kNone, 1, 1, false, false};
  auto calls = SynthesizeBuiltinCalls(sig, m);
  EXPECT_EQ(calls.size(), 2u);
}

TEST(BuiltinSynthesis, VariadicGetsZeroOneTwoArguments) {
  auto m = ShortestStrings(Grammar::MiniLang());
  BuiltinSignature sig{"arr", ReceiverKind::kNone, 0, 0, true, false};
  EXPECT_EQ(SynthesizeBuiltinCalls(sig, m).size(), 3u);
}

TEST(BuiltinSynthesis, RejectsNegativeCounts) {
  BuiltinSignature sig{"f", ReceiverKind::kNone, -1, 0, false, false};
  EXPECT_THROW(sig.Validate(), GrammarError);
}

TEST(Parser, RoundTripsCanonicalSource) {
  const Grammar& g = Grammar::MiniLang();
  for (const char* src : {"var x = 1 + 2;", "if (x) { y = {a: 1, \"b\": [1, 2]}; } else throw x;",
                          "function f(a, b = 1) { return a.b[0](b); }", "x++; --y; !z;"}) {
    NodePtr tree = Parse(g, src);
    EXPECT_TRUE(SameTree(tree, Parse(g, Unparse(tree)))) << src;
  }
}

TEST(Parser, ReportsPositionOfFailure) {
  try {
    Parse(Grammar::MiniLang(), "var = 1;");
    FAIL() << "expected a parse failure";
  } catch (const ParseFailure& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_EQ(e.found(), "=");
  }
}

TEST(Parser, DanglingElseBindsToNearestIf) {
  const Grammar& g = Grammar::MiniLang();
  NodePtr tree = Parse(g, "if (a) if (b) x; else y;");
  EXPECT_EQ(Unparse(tree), "if (a) if (b) x; else y;");
}

TEST(Parser, ReplaceNodeKeepsTheRest) {
  const Grammar& g = Grammar::MiniLang();
  NodePtr tree = Parse(g, "var x = 1 + 2;");
  auto nodes = Preorder(tree);
  size_t id = 0;  // first PrimaryExpression in pre-order is the `1`
  while (id < nodes.size() && nodes[id]->production != "PrimaryExpression") ++id;
  ASSERT_LT(id, nodes.size());
  NodePtr out = ReplaceNode(tree, id, Parse(g, "true", "PrimaryExpression"));
  EXPECT_EQ(Unparse(out), "var x = true + 2;");
}

TEST(Render, KeepsTokensApart) {
  EXPECT_EQ(RenderTokens({"x", "+", "+", "y"}), "x + + y");
  EXPECT_EQ(RenderTokens({"a", "-", "-", "1"}), "a - -1");
  EXPECT_EQ(SpacedLength({"(", ")"}), 3u);
}

TEST(Lexer, StringLiteralRoundTrip) {
  for (std::string s : {"", "a\"b", "line\nbreak", "back\\slash"})
    EXPECT_EQ(DecodeStringLiteral(EncodeStringLiteral(s)), s);
}

TEST(SyntaxCoverage, CountsReachableAlternatives) {
  Grammar g = Grammar::FromText(kMemberGrammar);
  auto c = SyntacticCoverage({"x", "new x()"}, g);
  EXPECT_EQ(c.reachable, ReachableAlternatives(g).size());
  EXPECT_GT(c.covered, 0u);
  EXPECT_LT(c.ratio(), 1.0);
  auto all = SyntacticCoverage(NonRecursiveSynthesize(g, "MemberExpression"), g);
  EXPECT_DOUBLE_EQ(all.ratio(), 1.0);
}

}  // namespace
}  // namespace specdiff::grammar
