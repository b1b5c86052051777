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

#ifndef BDL_RULE_HPP
#define BDL_RULE_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "bdl/priority.hpp"
#include "bdl/term.hpp"

namespace bdl {

/// A classical Horn rule: head holds whenever every body literal holds.
/// Every head variable must occur in the body.
struct StrictRule {
  std::string name;
  Literal head;
  std::vector<Literal> body;

  auto operator<=>(const StrictRule&) const = default;
};

/// A ground disjunction of facts, e.g. broken(left) | broken(right).
/// Participates in consistency and entailment queries only.
struct DisjunctiveFact {
  std::vector<Literal> disjuncts;  // sorted, de-duplicated, non-empty

  void normalize() {
    std::sort(disjuncts.begin(), disjuncts.end());
    disjuncts.erase(std::unique(disjuncts.begin(), disjuncts.end()), disjuncts.end());
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < disjuncts.size(); ++i) {
      if (i) s += " | ";
      s += disjuncts[i].to_string();
    }
    return s;
  }

  auto operator<=>(const DisjunctiveFact&) const = default;
};

/// A prioritized default: fires when the prerequisite holds and no
/// justification's complement is known; the conclusions are retractable.
/// An empty prerequisite means "true".
struct DefaultRule {
  std::string name;
  std::vector<Literal> prerequisite;    // conjunction; empty = true
  std::vector<Literal> justifications;  // non-empty
  std::vector<Literal> conclusions;     // non-empty, conjunctive
  Priority order;                       // finite

  auto operator<=>(const DefaultRule&) const = default;
};

/// T = (W, D): W is facts + disjunctive facts + strict rules, D the defaults.
struct DefaultTheory {
  std::set<Literal> facts;  // ground
  std::vector<DisjunctiveFact> disjunctive_facts;
  std::vector<StrictRule> strict_rules;
  std::vector<DefaultRule> defaults;
  std::set<std::string> constants;  // every constant name appearing anywhere

  void collect_constants() {
    auto add = [this](const Literal& l) {
      for (const Term& t : l.args)
        if (t.is_constant()) constants.insert(t.name);
    };
    for (const Literal& f : facts) add(f);
    for (const DisjunctiveFact& d : disjunctive_facts)
      for (const Literal& l : d.disjuncts) add(l);
    for (const StrictRule& r : strict_rules) {
      add(r.head);
      for (const Literal& l : r.body) add(l);
    }
    for (const DefaultRule& d : defaults) {
      for (const Literal& l : d.prerequisite) add(l);
      for (const Literal& l : d.justifications) add(l);
      for (const Literal& l : d.conclusions) add(l);
    }
  }
};

inline std::set<std::string> variables_of(const std::vector<Literal>& lits) {
  std::set<std::string> vars;
  for (const Literal& l : lits)
    for (const Term& t : l.args)
      if (t.is_variable()) vars.insert(t.name);
  return vars;
}

/// Validates the load-time invariants a theory must satisfy. Returns a
/// description of the first violation, or an empty string when valid.
/// Conclusion variables must be bound by the prerequisite or a
/// justification; a rule with a free conclusion variable would invent
/// individuals and is rejected as open-unsafe.
inline std::string validate_theory(const DefaultTheory& t) {
  std::set<std::string> names;
  for (const StrictRule& r : t.strict_rules) {
    if (!names.insert(r.name).second) return "duplicate rule name '" + r.name + "'";
    std::set<std::string> body_vars = variables_of(r.body);
    for (const Term& a : r.head.args)
      if (a.is_variable() && !body_vars.count(a.name))
        return "head variable '" + a.name + "' of rule '" + r.name + "' does not occur in the body";
  }
  for (const DefaultRule& d : t.defaults) {
    if (!names.insert(d.name).second) return "duplicate rule name '" + d.name + "'";
    if (d.justifications.empty()) return "default '" + d.name + "' has no justification";
    if (d.conclusions.empty()) return "default '" + d.name + "' has no conclusion";
    if (d.order.is_infinite()) return "default '" + d.name + "' has a non-finite order";
    std::set<std::string> bound = variables_of(d.prerequisite);
    std::set<std::string> just = variables_of(d.justifications);
    bound.insert(just.begin(), just.end());
    for (const Literal& c : d.conclusions)
      for (const Term& a : c.args)
        if (a.is_variable() && !bound.count(a.name))
          return "default '" + d.name + "' is open-unsafe: conclusion variable '" + a.name +
                 "' is bound by neither prerequisite nor justification";
  }
  for (const Literal& f : t.facts)
    if (!f.is_ground()) return "fact " + f.to_string() + " is not ground";
  for (const DisjunctiveFact& d : t.disjunctive_facts)
    for (const Literal& l : d.disjuncts)
      if (!l.is_ground()) return "disjunctive fact " + d.to_string() + " is not ground";
  return "";
}

}  // namespace bdl

#endif  // BDL_RULE_HPP
