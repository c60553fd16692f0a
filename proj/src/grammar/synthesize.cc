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


#include "grammar/synthesize.h"

#include <algorithm>
#include <map>
#include <set>

#include "grammar/render.h"

namespace specdiff::grammar {
namespace {

// Token strings are interned to ids while synthesizing.
using Ids = std::vector<int>;
using IdList = std::vector<Ids>;

class Synthesizer {
 public:
  Synthesizer(const Grammar& g, const ShortestStringMap& m) : g_(g) {
    for (const auto& nt : g.nonterminals()) shortest_.push_back(Intern(m.Tokens(nt)));
    for (const auto& r : g.rules()) {
      Ids ids;
      for (const Symbol& s : r.alternative) {
        ids.push_back(s.kind == SymbolKind::kNonterminal
                          ? -1
                          : Intern(s.kind == SymbolKind::kTerminal ? s.text : g.LexicalDefault(s.text)));
      }
      leaf_.push_back(std::move(ids));
    }
  }

  std::vector<TokenString> Run(int start) {
    std::vector<char> visited(g_.nonterminals().size(), 0);
    std::vector<TokenString> out;
    for (const Ids& ids : GetProd(start, visited)) {
      TokenString t;
      for (int id : ids) t.push_back(tokens_[id]);
      out.push_back(std::move(t));
    }
    return out;
  }

 private:
  int Intern(const std::string& tok) {
    auto [it, inserted] = ids_.emplace(tok, static_cast<int>(tokens_.size()));
    if (inserted) tokens_.push_back(tok);
    return it->second;
  }
  Ids Intern(const TokenString& toks) {
    Ids out;
    for (const auto& t : toks) out.push_back(Intern(t));
    return out;
  }

  // `visited` is taken by value: each call extends its own copy.
  IdList GetProd(int a, std::vector<char> visited) {
    if (visited[a]) return {shortest_[a]};
    visited[a] = 1;
    IdList d;
    std::set<Ids> seen;
    for (int ri : g_.RulesForIndex(a)) {
      for (auto& s : GetAlt(ri, visited)) {
        if (seen.insert(s).second) d.push_back(std::move(s));
      }
    }
    return d;
  }

  IdList GetAlt(int ri, const std::vector<char>& visited) {
    const auto& nts = g_.RuleSymbolIndices(ri);
    std::vector<std::pair<IdList, Ids>> parts;
    for (size_t i = 0; i < nts.size(); ++i) {
      if (nts[i] >= 0) {
        parts.emplace_back(GetProd(nts[i], visited), shortest_[nts[i]]);
      } else {
        parts.emplace_back(IdList(1, Ids{leaf_[ri][i]}), Ids{leaf_[ri][i]});
      }
    }
    size_t width = 1;
    for (const auto& p : parts) width = std::max(width, p.first.size());
    IdList out;
    for (size_t i = 0; i < width; ++i) {
      Ids str;
      for (const auto& [list, fallback] : parts) {
        const Ids& piece = i < list.size() ? list[i] : fallback;
        str.insert(str.end(), piece.begin(), piece.end());
      }
      out.push_back(std::move(str));
    }
    return out;
  }

  const Grammar& g_;
  std::map<std::string, int> ids_;
  std::vector<std::string> tokens_;
  std::vector<Ids> shortest_;  // by non-terminal index
  std::vector<Ids> leaf_;      // per rule, per symbol: token id or -1
};

}  // namespace

std::vector<TokenString> NonRecursiveSynthesizeTokens(const Grammar& grammar,
                                                      const std::string& start,
                                                      const ShortestStringMap& shortest) {
  if (!grammar.IsNonterminal(start)) throw GrammarError("unknown start symbol '" + start + "'");
  return Synthesizer(grammar, shortest).Run(grammar.NonterminalIndex(start));
}

std::vector<std::string> NonRecursiveSynthesize(const Grammar& grammar, const std::string& start,
                                                const ShortestStringMap& shortest) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& t : NonRecursiveSynthesizeTokens(grammar, start, shortest)) {
    std::string s = RenderTokens(t);
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> NonRecursiveSynthesize(const Grammar& grammar, const std::string& start) {
  return NonRecursiveSynthesize(grammar, start, ShortestStrings(grammar));
}

void BuiltinSignature::Validate() const {
  if (required_params < 0 || optional_params < 0) {
    throw GrammarError("builtin '" + name + "': negative parameter count");
  }
  if (variadic && optional_params != 0) {
    throw GrammarError("builtin '" + name + "': variadic with optional parameters");
  }
}

std::vector<std::string> SynthesizeBuiltinCalls(const BuiltinSignature& sig,
                                                const ShortestStringMap& shortest) {
  sig.Validate();
  TokenString arg = shortest.Has("AssignmentExpression") ? shortest.Tokens("AssignmentExpression")
                                                         : TokenString{"0"};
  int lo = sig.required_params;
  int hi = sig.variadic ? 2 : sig.required_params + sig.optional_params;
  if (sig.variadic) lo = 0;

  std::vector<TokenString> receivers;
  switch (sig.receiver) {
    case ReceiverKind::kNone: receivers.push_back({}); break;
    case ReceiverKind::kObject: receivers.push_back({"{", "}"}); break;
    case ReceiverKind::kArray: receivers.push_back({"arr", "(", ")"}); break;
  }
  if (sig.receiver != ReceiverKind::kNone) receivers.push_back({"null"});

  std::vector<std::string> out;
  for (const auto& recv : receivers) {
    for (int n = lo; n <= hi; ++n) {
      TokenString call;
      if (sig.constructor_style) call.push_back("new");
      call.push_back(sig.name);
      call.push_back("(");
      bool first = true;
      auto comma = [&] {
        if (!first) call.push_back(",");
        first = false;
      };
      if (!recv.empty()) {
        comma();
        call.insert(call.end(), recv.begin(), recv.end());
      }
      for (int i = 0; i < n; ++i) {
        comma();
        call.insert(call.end(), arg.begin(), arg.end());
      }
      call.push_back(")");
      call.push_back(";");
      out.push_back(RenderTokens(call));
    }
  }
  return out;
}

const std::vector<BuiltinSignature>& MiniLangBuiltins() {
  static const auto* kBuiltins = new std::vector<BuiltinSignature>{
      {"arr", ReceiverKind::kNone, 0, 0, true, false},
      {"keys", ReceiverKind::kObject, 0, 0, false, false},
      {"freeze", ReceiverKind::kObject, 0, 0, false, false},
      {"indexOf", ReceiverKind::kArray, 1, 1, false, false},
  };
  return *kBuiltins;
}

std::vector<std::string> MiniLangSeeds() {
  const Grammar& g = Grammar::MiniLang();
  ShortestStringMap m = ShortestStrings(g);
  std::vector<std::string> seeds = NonRecursiveSynthesize(g, g.start(), m);
  std::set<std::string> seen(seeds.begin(), seeds.end());
  for (const auto& sig : MiniLangBuiltins()) {
    for (auto& s : SynthesizeBuiltinCalls(sig, m)) {
      if (seen.insert(s).second) seeds.push_back(std::move(s));
    }
  }
  return seeds;
}

}  // namespace specdiff::grammar
