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

#ifndef BDL_CONFLICT_HPP
#define BDL_CONFLICT_HPP

#include <string>
#include <vector>

#include "bdl/state.hpp"

namespace bdl {

/// Alternating statement / explanation-set tree rooted at a conflict.
/// Statement nodes carry the minimum order over the supports concluding
/// them (+infinity when asserted); explanation-set nodes display infinity.
struct ConflictTreeNode {
  enum class Kind { Statement, ExplanationSet };
  Kind kind = Kind::Statement;
  std::string label;  // literal text, disjunction text, or rule name
  Priority own_value = Priority::infinity();
  // For explanation sets: the order at which the set's own support can be
  // cut directly (+infinity unless it is a default support). The displayed
  // node value of a set stays infinite.
  Priority cut_value = Priority::infinity();
  Priority cost = Priority::infinity();
  std::vector<ConflictTreeNode> children;
};

struct ConflictTree {
  std::vector<ConflictTreeNode> roots;  // one statement per core member
};

/// One way to resolve a conflict: defeat `target` by retracting `cuts`,
/// one minimal-cost default conclusion per explanation set, recursively.
/// Cost is the maximum order among the retracted supports.
struct RemovalPlan {
  Literal target;
  std::vector<SupportRef> cuts;
  Priority cost = Priority::infinity();
};

struct ConflictAnalysis {
  ConflictTree tree;
  std::vector<RemovalPlan> plans;  // all minimum-cost targets; empty iff unresolvable
  bool unresolvable = false;
};

/// Min-max defeat cost of a fact: every explanation set must be broken
/// (max across sets); a set breaks at its cheapest point, either the
/// default support itself or one of its premises (min within a set).
Priority defeat_cost(const ReasonerState& state, const Literal& fact);

ConflictTree build_conflict_tree(const ReasonerState& state, const ConflictCore& core);

/// Cost recursion on an already-built tree: statements take the maximum
/// over their sets, sets the minimum of their own cut order and their
/// cheapest member. Matches defeat_cost on trees built from a state.
Priority node_cost(const ConflictTreeNode& node);

/// Runs the min-max analysis and materializes removal plans for every
/// minimum-cost root statement; ties yield multiple plans.
ConflictAnalysis analyze_conflict(const ReasonerState& state, const ConflictCore& core);

/// Debug export: node kind, label, order value, cost, children.
std::string conflict_tree_to_json(const ConflictTree& tree);

}  // namespace bdl

#endif  // BDL_CONFLICT_HPP
