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

#include "bdl/conflict.hpp"

#include <algorithm>

#include "json.hpp"

namespace bdl {
namespace {

Priority defeat_rec(const ReasonerState& state, const Literal& fact, std::set<Literal>& path) {
  auto it = state.facts().find(fact);
  if (it == state.facts().end()) return Priority::infinity();
  path.insert(fact);
  Priority worst = Priority::finite(0);  // max over supports
  bool any = false;
  for (const Support& s : it->second.supports) {
    Priority brk;
    if (s.kind == SupportKind::Asserted) {
      brk = Priority::infinity();
    } else {
      Priority premise_min = Priority::infinity();
      for (const Literal& p : s.premises) {
        if (path.count(p)) continue;  // not well-founded along this path
        Priority d = defeat_rec(state, p, path);
        if (d < premise_min) premise_min = d;
      }
      brk = premise_min;
      if (s.kind == SupportKind::Default && s.order < brk) brk = s.order;
    }
    if (!any || worst < brk) worst = brk;
    any = true;
  }
  path.erase(fact);
  return any ? worst : Priority::infinity();
}

void realize_cuts(const ReasonerState& state, const Literal& fact, std::set<Literal>& path,
                  std::vector<SupportRef>& cuts) {
  auto it = state.facts().find(fact);
  if (it == state.facts().end()) return;
  path.insert(fact);
  for (const Support& s : it->second.supports) {
    // cheapest way to break this explanation set; premises are ordered, so
    // ties resolve to the canonically smallest literal
    Priority premise_min = Priority::infinity();
    const Literal* argmin = nullptr;
    for (const Literal& p : s.premises) {
      if (path.count(p)) continue;
      Priority d = defeat_rec(state, p, path);
      if (argmin == nullptr || d < premise_min) {
        premise_min = d;
        argmin = &p;
      }
    }
    if (s.kind == SupportKind::Default && s.order <= premise_min) {
      bool seen = false;
      for (const SupportRef& c : cuts)
        if (c.fact == fact && c.support == s) seen = true;
      if (!seen) cuts.push_back({fact, s});
    } else if (argmin != nullptr && !premise_min.is_infinite()) {
      realize_cuts(state, *argmin, path, cuts);
    }
  }
  path.erase(fact);
}

ConflictTreeNode build_statement(const ReasonerState& state, const Literal& fact,
                                 std::set<Literal>& path);

ConflictTreeNode build_set(const ReasonerState& state, const Support& s,
                           std::set<Literal>& path) {
  ConflictTreeNode node;
  node.kind = ConflictTreeNode::Kind::ExplanationSet;
  node.label = s.rule + (s.instance.empty() ? "" : " " + s.instance);
  node.own_value = Priority::infinity();
  node.cut_value = s.kind == SupportKind::Default ? s.order : Priority::infinity();
  for (const Literal& p : s.premises) {
    if (path.count(p)) continue;
    node.children.push_back(build_statement(state, p, path));
  }
  return node;
}

ConflictTreeNode build_statement(const ReasonerState& state, const Literal& fact,
                                 std::set<Literal>& path) {
  ConflictTreeNode node;
  node.kind = ConflictTreeNode::Kind::Statement;
  node.label = fact.to_string();
  auto it = state.facts().find(fact);
  if (it == state.facts().end()) {
    node.own_value = Priority::infinity();
    node.cost = Priority::infinity();
    return node;
  }
  // minimum order among the supports concluding this statement
  Priority own = Priority::infinity();
  bool asserted = false;
  for (const Support& s : it->second.supports) {
    if (s.kind == SupportKind::Asserted) asserted = true;
    if (s.order < own) own = s.order;
  }
  node.own_value = own;
  bool purely_asserted = true;
  for (const Support& s : it->second.supports)
    if (s.kind != SupportKind::Asserted) purely_asserted = false;
  if (!purely_asserted) {  // asserted statement nodes stay leaves
    path.insert(fact);
    for (const Support& s : it->second.supports) {
      if (s.kind == SupportKind::Asserted) continue;
      node.children.push_back(build_set(state, s, path));
    }
    if (asserted) {
      // an asserted support is an unbreakable explanation set with no members
      ConflictTreeNode leaf;
      leaf.kind = ConflictTreeNode::Kind::ExplanationSet;
      leaf.label = "asserted";
      node.children.push_back(std::move(leaf));
    }
    path.erase(fact);
  }
  node.cost = defeat_rec(state, fact, path);
  return node;
}

nlohmann::json node_to_json(const ConflictTreeNode& n) {
  nlohmann::json j;
  j["kind"] = n.kind == ConflictTreeNode::Kind::Statement ? "statement" : "explanation-set";
  j["label"] = n.label;
  j["order"] = n.own_value.is_infinite() ? nlohmann::json("inf")
                                         : nlohmann::json(n.own_value.to_double());
  j["cost"] = n.cost.is_infinite() ? nlohmann::json("inf") : nlohmann::json(n.cost.to_double());
  nlohmann::json kids = nlohmann::json::array();
  for (const ConflictTreeNode& c : n.children) kids.push_back(node_to_json(c));
  j["children"] = std::move(kids);
  return j;
}

}  // namespace

Priority defeat_cost(const ReasonerState& state, const Literal& fact) {
  std::set<Literal> path;
  return defeat_rec(state, fact, path);
}

Priority node_cost(const ConflictTreeNode& node) {
  if (node.kind == ConflictTreeNode::Kind::Statement) {
    if (node.children.empty()) return node.own_value;
    Priority worst = Priority::finite(0);
    bool any = false;
    for (const ConflictTreeNode& set : node.children) {
      Priority c = node_cost(set);
      if (!any || worst < c) worst = c;
      any = true;
    }
    return worst;
  }
  Priority best = node.cut_value;
  for (const ConflictTreeNode& stmt : node.children) {
    Priority c = node_cost(stmt);
    if (c < best) best = c;
  }
  return best;
}

ConflictTree build_conflict_tree(const ReasonerState& state, const ConflictCore& core) {
  ConflictTree tree;
  std::set<Literal> path;
  for (const Literal& l : core.facts) tree.roots.push_back(build_statement(state, l, path));
  for (const DisjunctiveFact& d : core.disjuncts) {
    ConflictTreeNode node;
    node.kind = ConflictTreeNode::Kind::Statement;
    node.label = d.to_string();
    node.own_value = Priority::infinity();
    node.cost = Priority::infinity();
    tree.roots.push_back(std::move(node));
  }
  return tree;
}

ConflictAnalysis analyze_conflict(const ReasonerState& state, const ConflictCore& core) {
  ConflictAnalysis out;
  out.tree = build_conflict_tree(state, core);

  Priority best = Priority::infinity();
  for (const Literal& l : core.facts) {
    Priority c = defeat_cost(state, l);
    if (c < best) best = c;
  }
  if (best.is_infinite()) {
    out.unresolvable = true;
    return out;
  }
  for (const Literal& l : core.facts) {
    if (defeat_cost(state, l) != best) continue;
    RemovalPlan plan;
    plan.target = l;
    plan.cost = best;
    std::set<Literal> path;
    realize_cuts(state, l, path, plan.cuts);
    out.plans.push_back(std::move(plan));
  }
  return out;
}

std::string conflict_tree_to_json(const ConflictTree& tree) {
  nlohmann::json roots = nlohmann::json::array();
  for (const ConflictTreeNode& n : tree.roots) roots.push_back(node_to_json(n));
  return roots.dump(2);
}

}  // namespace bdl
