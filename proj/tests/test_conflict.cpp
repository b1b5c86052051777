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

#include "bdl/conflict.hpp"
#include "bdl/parser.hpp"
#include "support/generators.hpp"

using namespace bdl;
using bdl::testing::lit;

namespace {

Support dsup(const std::string& rule, std::set<Literal> premises, int order) {
  Support s;
  s.kind = SupportKind::Default;
  s.rule = rule;
  s.instance = rule + "[]";
  s.premises = std::move(premises);
  s.order = Priority::finite(order);
  return s;
}

ConflictCore pair_core(const Literal& a, const Literal& b, bool default_reason = true) {
  ConflictCore core;
  core.is_pair = true;
  core.facts = {a, b};
  core.default_reason = default_reason;
  return core;
}

}  // namespace

TEST_CASE("conflict tree for the basic penguin conflict") {
  // flies(t) by a default of order 1, -flies(t) by a strict rule
  DefaultTheory t;
  {
    ParseResult r = parse_kb("penguin(t).\n-flies(X) :- penguin(X).\n");
    REQUIRE(r.ok());
    t = std::move(*r.theory);
  }
  ReasonerState st = ReasonerState::from_theory(t);
  Literal flies = lit("flies", {"t"});
  st.assert_fact(flies, dsup("d0", {}, 1));

  ConflictCore core = pair_core(flies, flies.complement());
  ConflictTree tree = build_conflict_tree(st, core);
  REQUIRE(tree.roots.size() == 2);
  CHECK(tree.roots[0].label == "flies(t)");
  CHECK(tree.roots[0].own_value == Priority::finite(1));
  REQUIRE(tree.roots[0].children.size() == 1);
  CHECK(tree.roots[0].children[0].kind == ConflictTreeNode::Kind::ExplanationSet);
  CHECK(tree.roots[1].own_value.is_infinite());

  CHECK(node_cost(tree.roots[0]) == Priority::finite(1));
  CHECK(node_cost(tree.roots[1]).is_infinite());

  ConflictAnalysis analysis = analyze_conflict(st, core);
  REQUIRE(analysis.plans.size() == 1);
  CHECK(analysis.plans[0].target == flies);
  CHECK(analysis.plans[0].cost == Priority::finite(1));
  REQUIRE(analysis.plans[0].cuts.size() == 1);
  CHECK(analysis.plans[0].cuts[0].fact == flies);
}

TEST_CASE("asserted core members are leaves and unresolvable") {
  DefaultTheory t;
  {
    ParseResult r = parse_kb("p(a). -p(a).\n");
    REQUIRE(r.ok());
    t = std::move(*r.theory);
  }
  ReasonerState st = ReasonerState::from_theory(t);
  ConflictCore core = pair_core(lit("p", {"a"}), lit("p", {"a"}, true), false);
  ConflictTree tree = build_conflict_tree(st, core);
  REQUIRE(tree.roots.size() == 2);
  CHECK(tree.roots[0].children.empty());  // asserted statements are leaves
  CHECK(node_cost(tree.roots[0]).is_infinite());

  ConflictAnalysis analysis = analyze_conflict(st, core);
  CHECK(analysis.unresolvable);
  CHECK(analysis.plans.empty());
}

TEST_CASE("node_cost recursion on hand-built trees") {
  // statement with own order 3 whose single set's cheapest member costs 5
  ConflictTreeNode cheap_stmt;
  cheap_stmt.kind = ConflictTreeNode::Kind::Statement;
  cheap_stmt.own_value = Priority::finite(5);
  ConflictTreeNode cheap_set;
  cheap_set.kind = ConflictTreeNode::Kind::ExplanationSet;
  cheap_set.cut_value = Priority::finite(5);
  // the member itself is a default conclusion of order 5 with asserted premises
  cheap_stmt.children.push_back([] {
    ConflictTreeNode set;
    set.kind = ConflictTreeNode::Kind::ExplanationSet;
    set.cut_value = Priority::finite(5);
    return set;
  }());

  ConflictTreeNode stmt;
  stmt.kind = ConflictTreeNode::Kind::Statement;
  stmt.own_value = Priority::finite(3);
  ConflictTreeNode set;
  set.kind = ConflictTreeNode::Kind::ExplanationSet;
  set.cut_value = Priority::finite(3);  // its own support is the order-3 default
  set.children.push_back(cheap_stmt);
  stmt.children.push_back(set);
  CHECK(node_cost(stmt) == Priority::finite(3));  // min(3, max(min 5)) = 3

  // asserted leaf
  ConflictTreeNode leaf;
  leaf.kind = ConflictTreeNode::Kind::Statement;
  leaf.own_value = Priority::infinity();
  CHECK(node_cost(leaf).is_infinite());

  // infinite own order with two strict sets costing 2 and 4
  ConflictTreeNode strict_stmt;
  strict_stmt.kind = ConflictTreeNode::Kind::Statement;
  strict_stmt.own_value = Priority::infinity();
  for (int cost : {2, 4}) {
    ConflictTreeNode s;
    s.kind = ConflictTreeNode::Kind::ExplanationSet;
    ConflictTreeNode member;
    member.kind = ConflictTreeNode::Kind::Statement;
    member.own_value = Priority::finite(cost);
    ConflictTreeNode member_set;
    member_set.kind = ConflictTreeNode::Kind::ExplanationSet;
    member_set.cut_value = Priority::finite(cost);
    member.children.push_back(member_set);
    s.children.push_back(member);
    strict_stmt.children.push_back(s);
  }
  CHECK(node_cost(strict_stmt) == Priority::finite(4));  // min(inf, max(2,4)) = 4
}

TEST_CASE("defeating a fact with several supports costs the dearest set") {
  // c has two default supports of orders 2 and 5 over asserted premises:
  // removing it means cutting both, so the cost is 5
  DefaultTheory t;
  {
    ParseResult r = parse_kb("a(x). b(x).\n");
    REQUIRE(r.ok());
    t = std::move(*r.theory);
  }
  ReasonerState st = ReasonerState::from_theory(t);
  Literal c = lit("c", {"x"});
  st.assert_fact(c, dsup("d1", {lit("a", {"x"})}, 2));
  st.assert_fact(c, dsup("d2", {lit("b", {"x"})}, 5));
  CHECK(defeat_cost(st, c) == Priority::finite(5));

  // mixed default + strict support is undefeatable from the default side
  ReasonerState st2 = ReasonerState::from_theory(t);
  st2.assert_fact(c, dsup("d1", {lit("a", {"x"})}, 2));
  Support strict;
  strict.kind = SupportKind::Strict;
  strict.rule = "s";
  strict.premises = {lit("b", {"x"})};
  st2.assert_fact(c, strict);
  CHECK(defeat_cost(st2, c).is_infinite());
}

TEST_CASE("nixon ties produce two plans") {
  DefaultTheory t;
  {
    ParseResult r = parse_kb("quaker(nixon). republican(nixon).\n");
    REQUIRE(r.ok());
    t = std::move(*r.theory);
  }
  ReasonerState st = ReasonerState::from_theory(t);
  Literal pac = lit("pacifist", {"nixon"});
  st.assert_fact(pac, dsup("d_q", {lit("quaker", {"nixon"})}, 0));
  st.assert_fact(pac.complement(), dsup("d_r", {lit("republican", {"nixon"})}, 0));

  ConflictAnalysis analysis = analyze_conflict(st, pair_core(pac, pac.complement()));
  REQUIRE(analysis.plans.size() == 2);
  CHECK(analysis.plans[0].target == pac);
  CHECK(analysis.plans[1].target == pac.complement());
  CHECK(analysis.plans[0].cost == Priority::finite(0));
}

TEST_CASE("min-max analysis matches the exhaustive retraction oracle") {
  testing::Rng rng(20240);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int rounds = 0;
  while (rounds < 120) {
    testing::SupportGraph g = testing::random_support_graph(rng, pick(4, 9), true);
    Literal goal = lit("goal", {"c"});
    Literal ngoal = lit("goal", {"c"}, true);
    if (!g.state.has_fact(goal) || !g.state.has_fact(ngoal)) continue;
    ++rounds;
    ConflictCore core = pair_core(goal, ngoal);
    ConflictAnalysis analysis = analyze_conflict(g.state, core);
    std::optional<Priority> oracle = testing::minmax_retraction_oracle(g, core.facts);
    if (analysis.unresolvable) {
      CHECK_FALSE(oracle.has_value());
      continue;
    }
    REQUIRE(oracle.has_value());
    CHECK(analysis.plans.front().cost == *oracle);
    // executing the chosen plan really resolves the conflict
    ReasonerState replay = g.state;
    replay.retract_supports(analysis.plans.front().cuts, RemovalKind::ConflictCut, "replay", 1);
    CHECK_FALSE(replay.has_fact(analysis.plans.front().target));
  }
}

TEST_CASE("node costs never drop when a default's order is raised") {
  testing::Rng rng(555);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int round = 0; round < 60; ++round) {
    testing::SupportGraph g = testing::random_support_graph(rng, pick(4, 8), true);
    Literal goal = lit("goal", {"c"});
    if (!g.state.has_fact(goal) || g.default_refs.empty()) continue;
    Priority before = defeat_cost(g.state, goal);

    // rebuild the same graph with one default support's order raised
    const SupportRef& ref = g.default_refs[static_cast<std::size_t>(
        pick(0, static_cast<int>(g.default_refs.size()) - 1))];
    Priority raised = Priority::finite(ref.support.order.num() / ref.support.order.den() +
                                       pick(1, 3));
    ReasonerState bumped = ReasonerState::from_theory(g.theory);
    for (const auto& [l, rec] : g.state.facts())
      for (const Support& s : rec.supports) {
        if (s.kind == SupportKind::Asserted) continue;
        Support use = s;
        if (l == ref.fact && s == ref.support) use.order = raised;
        bumped.assert_fact(l, use);
      }
    REQUIRE(bumped.has_fact(goal));
    Priority after = defeat_cost(bumped, goal);
    CHECK(after >= before);
  }
}

TEST_CASE("conflict tree export is valid json") {
  DefaultTheory t;
  {
    ParseResult r = parse_kb("p(a).\n");
    REQUIRE(r.ok());
    t = std::move(*r.theory);
  }
  ReasonerState st = ReasonerState::from_theory(t);
  Literal q = lit("q", {"a"});
  st.assert_fact(q, dsup("d", {lit("p", {"a"})}, 2));
  st.assert_fact(q.complement(), dsup("e", {lit("p", {"a"})}, 3));
  ConflictTree tree = build_conflict_tree(st, pair_core(q, q.complement()));
  std::string json = conflict_tree_to_json(tree);
  CHECK(json.find("\"statement\"") != std::string::npos);
  CHECK(json.find("\"explanation-set\"") != std::string::npos);
  CHECK(json.find("q(a)") != std::string::npos);
}
