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

#include "bdl/engine.hpp"
#include "bdl/parser.hpp"
#include "bdl/serialize.hpp"
#include "support/generators.hpp"

using namespace bdl;
using bdl::testing::lit;

namespace {

DefaultTheory theory_of(const char* text) {
  ParseResult r = parse_kb(text);
  REQUIRE(r.ok());
  return std::move(*r.theory);
}

std::set<Literal> only_extension(const ReasoningOutcome& outcome) {
  REQUIRE(outcome.extensions.size() == 1);
  return outcome.extensions[0].fact_set();
}

}  // namespace

TEST_CASE("applicable_instances honours all five checks") {
  SUBCASE("a justification whose complement is strictly derived blocks the rule") {
    DefaultTheory t = theory_of(
        "penguin(tweety).\n"
        "bird(X) :- penguin(X).\n"
        "-flies(X) :- penguin(X).\n"
        "default d0 [order=1]: bird(X) : flies(X) / flies(X).\n");
    auto instances = ground_defaults(t);
    ReasonerState st = ReasonerState::from_theory(t);
    CHECK(applicable_instances(st, instances, Semantics::Joint).empty());
    CHECK(applicable_instances(st, instances, Semantics::Reiter).empty());
  }

  SUBCASE("self-defeater with the fact asserted never fires") {
    DefaultTheory t = theory_of("man(x).\ndefault d0: true : -man(X) / man(X).\n");
    auto instances = ground_defaults(t);
    ReasonerState st = ReasonerState::from_theory(t);
    CHECK(applicable_instances(st, instances, Semantics::Joint).empty());
  }

  SUBCASE("joint semantics excludes an arm once the other is assumed") {
    DefaultTheory t = theory_of(
        "broken(left) | broken(right).\n"
        "default d_use: true : useable(X), -broken(X) / useable(X).\n");
    auto instances = ground_defaults(t);
    ReasonerState st = ReasonerState::from_theory(t);
    auto both = applicable_instances(st, instances, Semantics::Joint);
    CHECK(both.size() == 2);  // individually, both arms qualify

    // fire the right arm, assuming -broken(right)
    std::vector<DefaultInstance> right;
    for (const DefaultInstance& i : instances)
      if (i.id().find("right") != std::string::npos) right.push_back(i);
    REQUIRE(right.size() == 1);
    ReasonerState assumed = execute_defaults(st, right);
    auto rest = applicable_instances(assumed, instances, Semantics::Joint);
    CHECK(rest.empty());  // the left arm now fails the joint check
    // under reiter semantics the joint check is off
    CHECK(applicable_instances(assumed, instances, Semantics::Reiter).size() == 1);
  }
}

TEST_CASE("execute_defaults asserts conclusions with provenance") {
  DefaultTheory t = theory_of(
      "friend(tom,bob). friend(bob,sally). friend(sally,tina).\n"
      "default d [order=1]: friend(X,Y), friend(Y,Z) : friend(X,Z) / friend(X,Z).\n");
  auto instances = ground_defaults(t);
  ReasonerState st = ReasonerState::from_theory(t);

  ReasonerState unchanged = execute_defaults(st, {});
  CHECK(unchanged.facts().size() == st.facts().size());

  auto fire = applicable_instances(st, instances, Semantics::Joint);
  ReasonerState step1 = execute_defaults(st, fire);
  CHECK(step1.has_fact(lit("friend", {"tom", "sally"})));
  auto fire2 = applicable_instances(step1, instances, Semantics::Joint);
  ReasonerState step2 = execute_defaults(step1, fire2);
  CHECK(step2.has_fact(lit("friend", {"tom", "tina"})));
  CHECK(step2.ledger().size() >= 3);
}

TEST_CASE("justification_check flags violated supports only") {
  DefaultTheory t = theory_of("football(a,b). dark(b).\n");
  ReasonerState st = ReasonerState::from_theory(t);
  CHECK(justification_check(st).empty());

  Support sup;
  sup.kind = SupportKind::Default;
  sup.rule = "d_football";
  sup.instance = "d_football[x]";
  sup.premises = {lit("football", {"a", "b"})};
  sup.justifications = {lit("snow", {"b"}, true)};
  sup.order = Priority::finite(1);
  st.assert_fact(lit("takesPlace", {"a"}), sup);
  CHECK(justification_check(st).empty());

  Support snow_sup;
  snow_sup.kind = SupportKind::Default;
  snow_sup.rule = "d_snow";
  snow_sup.instance = "d_snow[x]";
  snow_sup.justifications = {lit("snow", {"b"})};
  snow_sup.order = Priority::finite(3);
  st.assert_fact(lit("snow", {"b"}), snow_sup);

  auto viols = justification_check(st);
  REQUIRE(viols.size() == 1);
  CHECK(viols[0].fact == lit("takesPlace", {"a"}));
  CHECK(viols[0].support.rule == "d_football");

  // a fact with a second clean support survives the retraction
  Support clean = sup;
  clean.rule = "d_other";
  clean.instance = "d_other[x]";
  clean.justifications = {lit("fine", {"b"})};
  st.assert_fact(lit("takesPlace", {"a"}), clean);
  auto viols2 = justification_check(st);
  REQUIRE(viols2.size() == 1);  // only the violated support is reported
  st.retract_with_consequences(
      lit("takesPlace", {"a"}),
      [&](const Support& s) { return s == viols2[0].support; },
      RemovalKind::JustificationViolation, "", 1);
  CHECK(st.has_fact(lit("takesPlace", {"a"})));
}

TEST_CASE("extension_select defers a weaker obstacle and tombstones it") {
  // employed(bill) is wanted by d2 (order 2); -employed(bill) stands in the
  // way with support order 1, so Eq. 6 removes it and blocks re-derivation
  DefaultTheory t = theory_of(
      "dropout(bill).\n"
      "default d1 [order=3]: dropout(X) : adult(X) / adult(X).\n"
      "default d2 [order=2]: adult(X) : employed(X) / employed(X).\n"
      "default d3 [order=1]: dropout(X) : -employed(X) / -employed(X).\n");
  auto instances = ground_defaults(t);
  ReasonerState st = ReasonerState::from_theory(t);
  auto first = applicable_instances(st, instances, Semantics::Joint);
  st = execute_defaults(st, first);  // adult and -employed land
  REQUIRE(st.has_fact(lit("adult", {"bill"})));
  REQUIRE(st.has_fact(lit("employed", {"bill"}, true)));

  auto reductions = pending_reductions(st, instances, Semantics::Joint);
  REQUIRE(reductions.size() == 1);
  CHECK(reductions[0].fact == lit("employed", {"bill"}, true));
  CHECK(reductions[0].block == Priority::finite(2));

  ReasonerState reduced = extension_select(st, instances, Semantics::Joint, 2);
  CHECK_FALSE(reduced.has_fact(lit("employed", {"bill"}, true)));
  REQUIRE(reduced.tombstones().count(lit("employed", {"bill"}, true)) == 1);
  CHECK(reduced.tombstones().at(lit("employed", {"bill"}, true)).block == Priority::finite(2));

  // d3 (order 1) may not re-derive through the tombstone, d2 may fire
  auto after = applicable_instances(reduced, instances, Semantics::Joint);
  REQUIRE(after.size() == 1);
  CHECK(after[0].rule == "d2");

  // no reduction pending when nothing is hindered
  ReasonerState fresh = ReasonerState::from_theory(t);
  CHECK(extension_select(fresh, instances, Semantics::Joint).facts().size() ==
        fresh.facts().size());
}

TEST_CASE("extension_select leaves stronger obstacles alone") {
  // the obstacle outranks the hindered rule, so nothing is reduced
  DefaultTheory t = theory_of(
      "dropout(bill).\n"
      "default d1 [order=3]: dropout(X) : adult(X) / adult(X).\n"
      "default d2 [order=1]: adult(X) : employed(X) / employed(X).\n"
      "default d3 [order=2]: dropout(X) : -employed(X) / -employed(X).\n");
  auto instances = ground_defaults(t);
  ReasonerState st = ReasonerState::from_theory(t);
  st = execute_defaults(st, applicable_instances(st, instances, Semantics::Joint));
  CHECK(pending_reductions(st, instances, Semantics::Joint).empty());
}

TEST_CASE("is_fixed_point") {
  DefaultTheory t = theory_of(
      "penguin(tweety).\n"
      "bird(X) :- penguin(X).\n"
      "-flies(X) :- penguin(X).\n"
      "default d0 [order=1]: bird(X) : flies(X) / flies(X).\n");
  auto instances = ground_defaults(t);
  ReasonerState st = ReasonerState::from_theory(t);
  CHECK(is_fixed_point(st, instances, Semantics::Joint));  // d0 blocked outright

  DefaultTheory t2 = theory_of(
      "friend(tom,bob). friend(bob,sally). friend(sally,tina).\n"
      "default d [order=1]: friend(X,Y), friend(Y,Z) : friend(X,Z) / friend(X,Z).\n");
  auto instances2 = ground_defaults(t2);
  ReasonerState st2 = ReasonerState::from_theory(t2);
  CHECK_FALSE(is_fixed_point(st2, instances2, Semantics::Joint));  // work remains
  ReasonerState mid = execute_defaults(st2, applicable_instances(st2, instances2, Semantics::Joint));
  CHECK_FALSE(is_fixed_point(mid, instances2, Semantics::Joint));  // friend(tom,tina) pending
}

TEST_CASE("compute_extensions reproduces the flagship behaviours") {
  SUBCASE("penguin: one extension, no flying") {
    ReasoningOutcome o = compute_extensions(theory_of(
        "penguin(tweety).\nbird(X) :- penguin(X).\n-flies(X) :- penguin(X).\n"
        "default d0 [order=1]: bird(X) : flies(X) / flies(X).\n"));
    auto facts = only_extension(o);
    CHECK(facts.count(lit("bird", {"tweety"})));
    CHECK(facts.count(lit("flies", {"tweety"}, true)));
    CHECK_FALSE(facts.count(lit("flies", {"tweety"})));
  }

  SUBCASE("nixon: two extensions, both semantics") {
    const char* text =
        "quaker(nixon). republican(nixon).\n"
        "default d_q: quaker(X) : pacifist(X) / pacifist(X).\n"
        "default d_r: republican(X) : -pacifist(X) / -pacifist(X).\n";
    for (Semantics sem : {Semantics::Joint, Semantics::Reiter}) {
      EngineOptions opts;
      opts.semantics = sem;
      opts.mode = Mode::Skeptical;
      ReasoningOutcome o = compute_extensions(theory_of(text), opts);
      CHECK(o.extensions.size() == 2);
      CHECK(o.skeptical_core.count(lit("quaker", {"nixon"})));
      CHECK_FALSE(o.skeptical_core.count(lit("pacifist", {"nixon"})));
      CHECK_FALSE(o.skeptical_core.count(lit("pacifist", {"nixon"}, true)));
    }
  }

  SUBCASE("eager conflict path: defaults fire before strict info arrives") {
    // the strict refutation only lands after the default has fired, so the
    // run goes through the conflict analyzer rather than check (b)
    ReasoningOutcome o = compute_extensions(theory_of(
        "bird(tweety). penguin(tweety).\n"
        "-flies(X) :- penguin(X), grounded(X).\n"
        "default d0 [order=1]: bird(X) : flies(X) / flies(X).\n"
        "default d1 [order=2]: penguin(X) : grounded(X) / grounded(X).\n"));
    auto facts = only_extension(o);
    CHECK(facts.count(lit("grounded", {"tweety"})));
    CHECK(facts.count(lit("flies", {"tweety"}, true)));
    CHECK_FALSE(facts.count(lit("flies", {"tweety"})));
  }

  SUBCASE("unresolvable asserted conflict") {
    EngineOptions opts;
    ReasoningOutcome o = compute_extensions(theory_of("p(a). -p(a).\n"), opts);
    CHECK(o.extensions.empty());
    CHECK(o.diagnostics.unresolvable_branches == 1);
  }

  SUBCASE("self-defeater without the fact oscillates and is caught") {
    ReasoningOutcome o = compute_extensions(theory_of("seed(x).\ndefault d0: true : -man(X) / man(X).\n"));
    CHECK(o.extensions.empty());
    CHECK(o.diagnostics.cycle_branches >= 1);
    CHECK_FALSE(o.diagnostics.step_limit_hit);
  }

  SUBCASE("mutual defeat through strict rules branches in the sweep") {
    // two defaults each destroy the other's justification via strict rules;
    // the two survivor states are exactly the two Reiter extensions
    EngineOptions opts;
    opts.semantics = Semantics::Reiter;
    ReasoningOutcome o = compute_extensions(theory_of(
                                                "w(c).\n"
                                                "-a(X) :- q(X).\n"
                                                "-b(X) :- p(X).\n"
                                                "default d1: true : a(X) / p(X).\n"
                                                "default d2: true : b(X) / q(X).\n"),
                                            opts);
    CHECK(o.extensions.size() == 2);
  }
}

TEST_CASE("priority dominance between complementary single-conclusion defaults") {
  testing::Rng rng(31337);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int round = 0; round < 60; ++round) {
    int high = pick(1, 9);
    int low = pick(0, high - 1);
    bool neg_high = pick(0, 1) == 1;
    std::string text = "seen(a). heard(a).\n";
    text += "default hi [order=" + std::to_string(high) + "]: seen(X) : " +
            (neg_high ? "-win(X) / -win(X)" : "win(X) / win(X)") + ".\n";
    text += "default lo [order=" + std::to_string(low) + "]: heard(X) : " +
            (neg_high ? "win(X) / win(X)" : "-win(X) / -win(X)") + ".\n";
    for (Semantics sem : {Semantics::Joint, Semantics::Reiter}) {
      EngineOptions opts;
      opts.semantics = sem;
      ReasoningOutcome o = compute_extensions(theory_of(text.c_str()), opts);
      REQUIRE(o.extensions.size() == 1);
      Literal winner = lit("win", {"a"}, neg_high);
      INFO("semantics ", sem == Semantics::Joint ? "joint" : "reiter", " high ", high, " low ",
           low);
      CHECK(o.extensions[0].fact_set().count(winner) == 1);
      CHECK(o.extensions[0].fact_set().count(winner.complement()) == 0);
    }
  }
}

TEST_CASE("reiter-mode extensions match the brute-force oracle") {
  testing::Rng rng(777);
  EngineOptions opts;
  opts.semantics = Semantics::Reiter;
  for (int round = 0; round < 60; ++round) {
    DefaultTheory t = testing::random_theory(rng);
    auto instances = ground_defaults(t);
    if (instances.size() > 12) continue;
    std::set<std::set<Literal>> expected = testing::reiter_extensions_bruteforce(t, instances);
    ReasoningOutcome o = compute_extensions(t, opts);
    REQUIRE_FALSE(o.diagnostics.cap_tripped());
    std::set<std::set<Literal>> got;
    for (const Extension& e : o.extensions) got.insert(e.fact_set());
    INFO(pretty_print(t));
    CHECK(got == expected);
  }
}

TEST_CASE("every produced extension satisfies the four properties") {
  testing::Rng rng(901);
  for (int round = 0; round < 80; ++round) {
    testing::TheoryGenOptions gen;
    gen.priorities = round % 2 == 1;
    DefaultTheory t = testing::random_theory(rng, gen);
    auto instances = ground_defaults(t);
    ReasoningOutcome o = compute_extensions(t);
    for (const Extension& e : o.extensions) {
      std::string err = testing::check_extension_axioms(t, instances, e, Semantics::Joint);
      INFO(pretty_print(t), "\n", err);
      CHECK(err.empty());
    }
  }
}

TEST_CASE("identical inputs produce byte-identical outcomes") {
  const char* text =
      "quaker(nixon). republican(nixon).\n"
      "default d_q: quaker(X) : pacifist(X) / pacifist(X).\n"
      "default d_r: republican(X) : -pacifist(X) / -pacifist(X).\n";
  std::string first = serialize_outcome(compute_extensions(theory_of(text)));
  std::string second = serialize_outcome(compute_extensions(theory_of(text)));
  CHECK(first == second);
}

TEST_CASE("growth between expansion steps: execution only adds facts") {
  DefaultTheory t = theory_of(
      "friend(tom,bob). friend(bob,sally). friend(sally,tina).\n"
      "default d [order=1]: friend(X,Y), friend(Y,Z) : friend(X,Z) / friend(X,Z).\n");
  auto instances = ground_defaults(t);
  ReasonerState st = ReasonerState::from_theory(t);
  for (int i = 0; i < 4; ++i) {
    auto fire = applicable_instances(st, instances, Semantics::Joint);
    ReasonerState next = execute_defaults(st, fire);
    for (const auto& [l, rec] : st.facts()) CHECK(next.has_fact(l));
    st = std::move(next);
  }
}
