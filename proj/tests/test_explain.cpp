// Copyright 2026 the bdl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include "bdl/explain.hpp"
#include "bdl/parser.hpp"
#include "support/generators.hpp"

using namespace bdl;
using bdl::testing::lit;

namespace {

ReasoningOutcome run(const char* text, Semantics sem = Semantics::Joint) {
  ParseResult r = parse_kb(text);
  REQUIRE(r.ok());
  EngineOptions opts;
  opts.semantics = sem;
  return compute_extensions(*r.theory, opts);
}

}  // namespace

TEST_CASE("explain unfolds strict derivations down to assertions") {
  ReasoningOutcome o = run(
      "penguin(tweety).\nbird(X) :- penguin(X).\n-flies(X) :- penguin(X).\n"
      "default d0 [order=1]: bird(X) : flies(X) / flies(X).\n");
  REQUIRE(o.extensions.size() == 1);

  Explanation ex = explain(o.extensions[0], lit("flies", {"tweety"}, true));
  REQUIRE(ex.present);
  REQUIRE(ex.tree.has_value());
  REQUIRE(ex.tree->derivations.size() == 1);
  CHECK(ex.tree->derivations[0].rule == "r2");
  REQUIRE(ex.tree->derivations[0].premises.size() == 1);
  CHECK(ex.tree->derivations[0].premises[0].root == lit("penguin", {"tweety"}));
  CHECK(ex.tree->derivations[0].premises[0].asserted);

  // asserted fact explains as a single leaf
  Explanation leaf = explain(o.extensions[0], lit("penguin", {"tweety"}));
  REQUIRE(leaf.present);
  CHECK(leaf.tree->asserted);
  CHECK(leaf.tree->derivations.empty());
  CHECK(render(leaf, RenderFormat::Text) == "penguin(tweety) (asserted)\n");
}

TEST_CASE("explain reports the removal event for absent facts") {
  ReasoningOutcome o = run(
      "football(a,b). dark(b).\n"
      "default d_football [order=1]: football(Y,X) : -snow(X) / takesPlace(Y).\n"
      "default d_dark [order=2]: dark(X) : -sunny(X) / -sunny(X).\n"
      "default d_snow [order=3]: -sunny(X) : snow(X) / snow(X).\n");
  REQUIRE(o.extensions.size() == 1);
  Explanation ex = explain(o.extensions[0], lit("takesPlace", {"a"}));
  CHECK_FALSE(ex.present);
  REQUIRE(ex.absence.has_value());
  CHECK(ex.absence->ever_present);
  CHECK(ex.absence->removal_kind == "justification-violation");

  // a literal that never existed
  Explanation never = explain(o.extensions[0], lit("unicorn", {"b"}));
  CHECK_FALSE(never.present);
  CHECK_FALSE(never.absence->ever_present);
  CHECK(render(never, RenderFormat::Text).find("never derived") != std::string::npos);
}

TEST_CASE("friendship chain explains through two default applications") {
  ReasoningOutcome o = run(
      "friend(tom,bob). friend(bob,sally). friend(sally,tina).\n"
      "default d [order=1]: friend(X,Y), friend(Y,Z) : friend(X,Z) / friend(X,Z).\n");
  REQUIRE(o.extensions.size() == 1);
  Explanation ex = explain(o.extensions[0], lit("friend", {"tom", "tina"}));
  REQUIRE(ex.present);
  REQUIRE_FALSE(ex.tree->derivations.empty());
  bool cites_default = false;
  for (const auto& d : ex.tree->derivations) cites_default = cites_default || d.rule == "d";
  CHECK(cites_default);
  // some premise of some derivation is itself default-derived
  bool nested = false;
  for (const auto& d : ex.tree->derivations)
    for (const auto& p : d.premises) nested = nested || !p.derivations.empty();
  CHECK(nested);

  std::string text = render(ex, RenderFormat::Text);
  CHECK(text.find("friend(tom,tina)") == 0);
  CHECK(text.find("by d[") != std::string::npos);
  std::string json = render(ex, RenderFormat::Json);
  CHECK(json.find("\"literal\"") != std::string::npos);
}

TEST_CASE("diamond support shows both explanation branches") {
  DefaultTheory t;
  {
    ParseResult r = parse_kb("a(x). b(x).\n");
    REQUIRE(r.ok());
    t = std::move(*r.theory);
  }
  ReasonerState st = ReasonerState::from_theory(t);
  Literal c = lit("c", {"x"});
  for (const char* rule : {"d1", "d2"}) {
    Support s;
    s.kind = SupportKind::Default;
    s.rule = rule;
    s.instance = std::string(rule) + "[]";
    s.premises = {lit(rule[1] == '1' ? "a" : "b", {"x"})};
    s.justifications = {c};
    s.order = Priority::finite(0);
    st.assert_fact(c, s);
  }
  Extension ext{st, {}};
  Explanation ex = explain(ext, c);
  REQUIRE(ex.present);
  CHECK(ex.tree->derivations.size() == 2);
}

TEST_CASE("soundness and completeness over corpus-style runs") {
  const char* corpus_texts[] = {
      "penguin(tweety).\nbird(X) :- penguin(X).\n-flies(X) :- penguin(X).\n"
      "default d0 [order=1]: bird(X) : flies(X) / flies(X).\n",
      "dropout(bill).\n"
      "default d1 [order=3]: dropout(X) : adult(X) / adult(X).\n"
      "default d2 [order=2]: adult(X) : employed(X) / employed(X).\n"
      "default d3 [order=1]: dropout(X) : -employed(X) / -employed(X).\n",
      "penguin(a).\n"
      "default d1 [order=4]: penguin(X) : bird(X) / bird(X).\n"
      "default d2 [order=6]: bird(X) : oviparous(X) / oviparous(X).\n"
      "default d3 [order=3]: penguin(X) : inAntarctica(X) / inAntarctica(X).\n"
      "default d4 [order=1]: inAntarctica(X) : mammal(X) / mammal(X).\n"
      "default d5 [order=5]: mammal(X) : -oviparous(X) / -oviparous(X).\n"
      "default d6 [order=2]: oviparous(X) : -mammal(X) / -mammal(X).\n",
  };
  for (const char* text : corpus_texts) {
    ReasoningOutcome o = run(text);
    for (const Extension& ext : o.extensions)
      for (const auto& [l, rec] : ext.state.facts()) {
        Explanation ex = explain(ext, l);
        REQUIRE(ex.present);
        // completeness: every non-asserted fact has a non-empty explanation
        if (ext.state.status(l) != FactStatus::Asserted) CHECK_FALSE(ex.tree->derivations.empty());
        // soundness: premises of every derivation are facts of the extension,
        // so replaying the cited rule re-derives the literal
        for (const auto& d : ex.tree->derivations)
          for (const auto& p : d.premises) CHECK(ext.state.has_fact(p.root));
      }
  }
}
