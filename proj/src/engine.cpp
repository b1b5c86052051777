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

#include "bdl/engine.hpp"

#include <algorithm>
#include <map>

namespace bdl {
namespace {

bool prerequisite_holds(const ReasonerState& state, const DefaultInstance& inst) {
  for (const Literal& p : inst.prerequisite)
    if (!state.entails(p)) return false;
  return true;
}

bool is_spent(const ReasonerState& state, const DefaultInstance& inst) {
  for (const Literal& c : inst.conclusions)
    if (!state.has_fact(c)) return false;
  return true;
}

// check (b): some justification's complement is entailed
bool justification_defeated(const ReasonerState& state, const DefaultInstance& inst) {
  for (const Literal& j : inst.justifications)
    if (state.entails(j.complement())) return true;
  return false;
}

// check (e): a conclusion is tombstoned at an order this instance cannot beat
bool tombstone_blocked(const ReasonerState& state, const DefaultInstance& inst) {
  for (const Literal& c : inst.conclusions) {
    auto it = state.tombstones().find(c);
    if (it != state.tombstones().end() && inst.order <= it->second.block) return true;
  }
  return false;
}

// check (c): the instance's justifications must be satisfiable together
// with the facts and every assumed justification of order >= the
// instance's own. Lower-order assumptions cannot veto a stronger rule;
// the violated fact falls to the justification checker afterwards.
bool joint_blocked(const ReasonerState& state, const DefaultInstance& inst,
                   const std::map<Literal, Priority>& assumed) {
  ClauseSet cs = state.clause_set();
  for (const auto& [j, order] : assumed)
    if (order >= inst.order) cs.add_unit(j);
  for (const Literal& j : inst.justifications) cs.add_unit(j);
  return !cs.satisfiable();
}

bool applicable_for_execution(const ReasonerState& state, const DefaultInstance& inst,
                              Semantics semantics, const std::map<Literal, Priority>& assumed) {
  if (!prerequisite_holds(state, inst)) return false;
  if (is_spent(state, inst)) return false;
  if (justification_defeated(state, inst)) return false;
  if (tombstone_blocked(state, inst)) return false;
  if (semantics == Semantics::Joint && joint_blocked(state, inst, assumed)) return false;
  return true;
}

// Fixed-point applicability ignores tombstones: a rule held back only by a
// tombstone still counts as outstanding work, so a state suppressing it
// forever is not reported as an extension (the oscillation guard ends the
// branch instead).
bool applicable_for_fixpoint(const ReasonerState& state, const DefaultInstance& inst,
                             Semantics semantics, const std::map<Literal, Priority>& assumed) {
  if (!prerequisite_holds(state, inst)) return false;
  if (is_spent(state, inst)) return false;
  if (justification_defeated(state, inst)) return false;
  if (semantics == Semantics::Joint && joint_blocked(state, inst, assumed)) return false;
  return true;
}

std::string ids_of(const std::vector<DefaultInstance>& instances) {
  std::string s;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (i) s += ", ";
    s += instances[i].id();
  }
  return s;
}

}  // namespace

std::vector<DefaultInstance> applicable_instances(const ReasonerState& state,
                                                  const std::vector<DefaultInstance>& instances,
                                                  Semantics semantics) {
  std::map<Literal, Priority> assumed = state.assumed_justifications();
  std::vector<DefaultInstance> out;
  for (const DefaultInstance& inst : instances)
    if (applicable_for_execution(state, inst, semantics, assumed)) out.push_back(inst);
  return out;
}

std::vector<SupportRef> justification_check(const ReasonerState& state) {
  std::vector<SupportRef> out;
  for (const auto& [lit, rec] : state.facts())
    for (const Support& s : rec.supports) {
      if (s.kind != SupportKind::Default) continue;
      for (const Literal& j : s.justifications)
        if (state.entails(j.complement())) {
          out.push_back({lit, s});
          break;
        }
    }
  return out;
}

std::vector<Reduction> pending_reductions(const ReasonerState& state,
                                          const std::vector<DefaultInstance>& instances,
                                          Semantics semantics) {
  std::map<Literal, Priority> assumed = state.assumed_justifications();
  std::map<Literal, Reduction> by_fact;
  for (const DefaultInstance& inst : instances) {
    if (!prerequisite_holds(state, inst)) continue;
    if (is_spent(state, inst)) continue;
    if (tombstone_blocked(state, inst)) continue;

    std::vector<Literal> hindering;
    for (const Literal& j : inst.justifications)
      if (state.entails(j.complement())) hindering.push_back(j.complement());
    if (hindering.empty()) continue;

    // Every obstacle must be a removable default conclusion that the
    // hindered rule strictly outranks; otherwise the rule stays beaten.
    bool eligible = true;
    std::vector<SupportRef> cuts;
    for (const Literal& c : hindering) {
      auto it = state.facts().find(c);
      if (it == state.facts().end()) {
        eligible = false;  // entailed through a disjunction, nothing to cut
        break;
      }
      bool has_default = false;
      for (const Support& s : it->second.supports) {
        if (s.kind != SupportKind::Default) {
          eligible = false;  // survives through strict/asserted knowledge
          break;
        }
        has_default = true;
        if (!(s.order < inst.order)) {
          eligible = false;  // does not strictly outrank the incumbent
          break;
        }
        cuts.push_back({c, s});
      }
      if (!eligible || !has_default) {
        eligible = false;
        break;
      }
    }
    if (!eligible) continue;

    if (semantics == Semantics::Joint) {
      // hypothetically drop the obstacles, then require joint consistency
      ClauseSet cs;
      std::set<Literal> dropped(hindering.begin(), hindering.end());
      for (const auto& [lit, rec] : state.facts())
        if (!dropped.count(lit)) cs.add_unit(lit);
      for (const DisjunctiveFact& d : state.theory().disjunctive_facts)
        cs.add_clause(d.disjuncts);
      for (const auto& [j, order] : assumed)
        if (order >= inst.order) cs.add_unit(j);
      for (const Literal& j : inst.justifications) cs.add_unit(j);
      if (!cs.satisfiable()) continue;
    }

    for (const Literal& c : hindering) {
      auto [it, inserted] = by_fact.emplace(c, Reduction{c, {}, inst.order, inst.id()});
      if (inserted) {
        for (const SupportRef& ref : cuts)
          if (ref.fact == c) it->second.cuts.push_back(ref);
      } else {
        if (it->second.block < inst.order) it->second.block = inst.order;
        it->second.hindered += ", " + inst.id();
      }
    }
  }
  std::vector<Reduction> out;
  for (auto& [c, red] : by_fact) out.push_back(std::move(red));
  return out;
}

ReasonerState extension_select(const ReasonerState& state,
                               const std::vector<DefaultInstance>& instances,
                               Semantics semantics, int step) {
  std::vector<Reduction> reductions = pending_reductions(state, instances, semantics);
  if (reductions.empty()) return state;
  ReasonerState next = state;
  std::vector<SupportRef> cuts;
  for (const Reduction& r : reductions)
    cuts.insert(cuts.end(), r.cuts.begin(), r.cuts.end());
  std::string detail;
  for (const Reduction& r : reductions) {
    if (!detail.empty()) detail += "; ";
    detail += r.fact.to_string() + " deferred for " + r.hindered;
  }
  next.retract_supports(cuts, RemovalKind::Reduction, detail, step);
  for (const Reduction& r : reductions)
    next.add_tombstone(r.fact, r.block, {r.fact.complement()});
  return next;
}

ReasonerState execute_defaults(const ReasonerState& state,
                               const std::vector<DefaultInstance>& chosen) {
  ReasonerState next = state;
  for (const DefaultInstance& inst : chosen) {
    Support s;
    s.kind = SupportKind::Default;
    s.rule = inst.rule;
    s.instance = inst.id();
    s.order = inst.order;
    for (const Literal& p : inst.prerequisite)
      if (next.has_fact(p)) s.premises.insert(p);  // disjunction-entailed prerequisites rest on W
    s.justifications.insert(inst.justifications.begin(), inst.justifications.end());
    for (const Literal& c : inst.conclusions) next.assert_fact(c, s);
  }
  return next;
}

bool is_fixed_point(const ReasonerState& state, const std::vector<DefaultInstance>& instances,
                    Semantics semantics) {
  if (!state.is_consistent()) return false;
  if (!justification_check(state).empty()) return false;
  if (!pending_reductions(state, instances, semantics).empty()) return false;
  std::map<Literal, Priority> assumed = state.assumed_justifications();
  for (const DefaultInstance& inst : instances)
    if (applicable_for_fixpoint(state, inst, semantics, assumed)) return false;
  return true;
}

namespace {

struct Branch {
  ReasonerState state;
  std::vector<TraceStep> trace;
  std::set<std::string> seen;
  int steps = 0;
};

// All ways to pick the firing set for one Eq.-7 step under joint
// semantics: tiers in descending order, maximal jointly-satisfiable
// subsets within a tier, ties branching.
std::vector<std::vector<DefaultInstance>> execute_choices(const ReasonerState& state,
                                                          const std::vector<DefaultInstance>& candidates,
                                                          Semantics semantics,
                                                          Diagnostics& diagnostics) {
  if (semantics == Semantics::Reiter) return {candidates};

  std::map<Literal, Priority> assumed = state.assumed_justifications();

  // group by order, high to low
  std::map<Priority, std::vector<DefaultInstance>, std::greater<>> tier_map;
  for (const DefaultInstance& inst : candidates) tier_map[inst.order].push_back(inst);

  struct Partial {
    std::vector<DefaultInstance> chosen;
    std::vector<std::pair<Literal, Priority>> extra;  // justifications assumed this step
  };
  std::vector<Partial> partials{{}};

  for (const auto& [order, members] : tier_map) {
    std::vector<Partial> next;
    for (const Partial& partial : partials) {
      auto base_clauses = [&](const std::vector<const DefaultInstance*>& subset) {
        ClauseSet cs = state.clause_set();
        for (const auto& [j, o] : assumed)
          if (o >= order) cs.add_unit(j);
        for (const auto& [j, o] : partial.extra)
          if (o >= order) cs.add_unit(j);
        for (const DefaultInstance* inst : subset)
          for (const Literal& j : inst->justifications) cs.add_unit(j);
        return cs;
      };
      std::vector<const DefaultInstance*> all;
      for (const DefaultInstance& m : members) all.push_back(&m);

      std::vector<std::vector<const DefaultInstance*>> picks;
      if (base_clauses(all).satisfiable()) {
        picks.push_back(all);  // the whole tier fits together
      } else if (members.size() <= 12) {
        // maximal jointly-satisfiable subsets
        std::vector<std::vector<const DefaultInstance*>> sat_subsets;
        std::size_t n = members.size();
        for (std::size_t mask = 0; mask < (1u << n); ++mask) {
          std::vector<const DefaultInstance*> subset;
          for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) subset.push_back(&members[i]);
          if (base_clauses(subset).satisfiable()) sat_subsets.push_back(std::move(subset));
        }
        for (const auto& s : sat_subsets) {
          bool maximal = true;
          for (const auto& t : sat_subsets) {
            if (t.size() <= s.size()) continue;
            bool contains = true;
            for (const DefaultInstance* x : s)
              if (std::find(t.begin(), t.end(), x) == t.end()) {
                contains = false;
                break;
              }
            if (contains) {
              maximal = false;
              break;
            }
          }
          if (maximal) picks.push_back(s);
        }
      } else {
        diagnostics.notes.push_back("tier too large for exhaustive choice enumeration; using greedy pick");
        std::vector<const DefaultInstance*> greedy;
        for (const DefaultInstance& m : members) {
          greedy.push_back(&m);
          if (!base_clauses(greedy).satisfiable()) greedy.pop_back();
        }
        picks.push_back(greedy);
      }

      for (const auto& pick : picks) {
        Partial p = partial;
        for (const DefaultInstance* inst : pick) {
          p.chosen.push_back(*inst);
          for (const Literal& j : inst->justifications) p.extra.emplace_back(j, order);
        }
        next.push_back(std::move(p));
      }
    }
    partials = std::move(next);
  }

  std::vector<std::vector<DefaultInstance>> out;
  for (Partial& p : partials) {
    std::sort(p.chosen.begin(), p.chosen.end());
    out.push_back(std::move(p.chosen));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Resolves a batch of violated justifications. The removal order matters
// when one violated fact's absence clears another's violation, so every
// distinct outcome becomes a branch.
std::vector<ReasonerState> sweep_outcomes(const ReasonerState& state,
                                          const std::vector<SupportRef>& viols, int step,
                                          Diagnostics& diagnostics) {
  auto run_order = [&](const std::vector<std::size_t>& order) {
    ReasonerState s = state;
    for (std::size_t idx : order) {
      const SupportRef& v = viols[idx];
      auto it = s.facts().find(v.fact);
      if (it == s.facts().end()) continue;
      if (!it->second.supports.count(v.support)) continue;
      bool still = false;
      for (const Literal& j : v.support.justifications)
        if (s.entails(j.complement())) still = true;
      if (!still) continue;
      std::string detail = "justification of " + v.fact.to_string() + " via " +
                           (v.support.instance.empty() ? v.support.rule : v.support.instance) +
                           " violated";
      s.retract_supports({v}, RemovalKind::JustificationViolation, detail, step);
    }
    return s;
  };

  std::vector<std::size_t> order(viols.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (viols.size() > 5) {
    diagnostics.notes.push_back("violation batch too large to branch; processing canonically");
    return {run_order(order)};
  }
  std::map<std::string, ReasonerState> outcomes;
  do {
    ReasonerState s = run_order(order);
    outcomes.emplace(s.state_key(), std::move(s));
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<ReasonerState> out;
  for (auto& [key, s] : outcomes) out.push_back(std::move(s));
  return out;
}

}  // namespace

ReasoningOutcome compute_extensions(const DefaultTheory& theory, const EngineOptions& options) {
  ReasoningOutcome outcome;
  outcome.mode = options.mode;
  outcome.semantics = options.semantics;

  std::vector<DefaultInstance> instances;
  try {
    instances = ground_defaults(theory, options.max_ground_instances);
  } catch (const GroundingLimitError& e) {
    outcome.diagnostics.grounding_error = e.what();
    return outcome;
  }

  std::vector<Extension> found;
  int branches_created = 1;

  std::vector<Branch> work;
  work.push_back(Branch{ReasonerState::from_theory(theory), {}, {}, 0});

  auto fork = [&](std::vector<Branch>& children) {
    // children are pushed in reverse so the first alternative runs first
    for (auto it = children.rbegin(); it != children.rend(); ++it) {
      if (branches_created >= options.max_branches) {
        outcome.diagnostics.branch_limit_hit = true;
        break;
      }
      ++branches_created;
      work.push_back(std::move(*it));
    }
  };

  while (!work.empty()) {
    Branch branch = std::move(work.back());
    work.pop_back();

    bool alive = true;
    while (alive) {
      if (++branch.steps > options.max_steps) {
        outcome.diagnostics.step_limit_hit = true;
        alive = false;
        break;
      }
      std::string key = branch.state.state_key();
      if (!branch.seen.insert(key).second) {
        ++outcome.diagnostics.cycle_branches;
        outcome.diagnostics.notes.push_back("self-defeating default cycle; branch halted");
        alive = false;
        break;
      }

      if (auto core = branch.state.find_conflict()) {
        if (!core->default_reason) {
          ++outcome.diagnostics.unresolvable_branches;
          alive = false;
          break;
        }
        ConflictAnalysis analysis = analyze_conflict(branch.state, *core);
        if (options.dump_conflicts)
          outcome.conflict_dumps.push_back(conflict_tree_to_json(analysis.tree));
        if (analysis.unresolvable) {
          ++outcome.diagnostics.unresolvable_branches;
          alive = false;
          break;
        }
        std::vector<Branch> children;
        for (const RemovalPlan& plan : analysis.plans) {
          Branch child = branch;
          std::string detail = "conflict on " + plan.target.to_string() + " resolved at cost " +
                               plan.cost.to_string();
          child.state.retract_supports(plan.cuts, RemovalKind::ConflictCut, detail,
                                       branch.steps);
          std::set<Literal> blockers;
          for (const Literal& m : core->facts)
            if (m != plan.target) blockers.insert(m);
          for (const SupportRef& cut : plan.cuts)
            child.state.add_tombstone(cut.fact, plan.cost, blockers);
          child.trace.push_back(TraceStep{"conflict", detail});
          children.push_back(std::move(child));
        }
        if (children.size() == 1) {
          branch = std::move(children.front());
          continue;
        }
        fork(children);
        alive = false;
        break;
      }

      std::vector<SupportRef> viols = justification_check(branch.state);
      if (!viols.empty()) {
        std::vector<ReasonerState> states =
            sweep_outcomes(branch.state, viols, branch.steps, outcome.diagnostics);
        std::string detail;
        for (const SupportRef& v : viols) {
          if (!detail.empty()) detail += "; ";
          detail += v.fact.to_string();
        }
        if (states.size() == 1) {
          branch.state = std::move(states.front());
          branch.trace.push_back(TraceStep{"sweep", detail});
          continue;
        }
        std::vector<Branch> children;
        for (ReasonerState& s : states) {
          Branch child = branch;
          child.state = std::move(s);
          child.trace.push_back(TraceStep{"sweep", detail});
          children.push_back(std::move(child));
        }
        fork(children);
        alive = false;
        break;
      }

      std::vector<Reduction> reductions =
          pending_reductions(branch.state, instances, options.semantics);
      if (!reductions.empty()) {
        ReasonerState reduced =
            extension_select(branch.state, instances, options.semantics, branch.steps);
        std::string detail;
        for (const Reduction& r : reductions) {
          if (!detail.empty()) detail += "; ";
          detail += r.fact.to_string() + " deferred for " + r.hindered;
        }
        branch.state = std::move(reduced);
        branch.trace.push_back(TraceStep{"reduce", detail});
        continue;
      }

      std::map<Literal, Priority> assumed = branch.state.assumed_justifications();
      bool outstanding = false;
      for (const DefaultInstance& inst : instances)
        if (applicable_for_fixpoint(branch.state, inst, options.semantics, assumed)) {
          outstanding = true;
          break;
        }
      if (!outstanding) {
        found.push_back(Extension{branch.state, branch.trace});
        alive = false;
        break;
      }

      std::vector<DefaultInstance> candidates;
      for (const DefaultInstance& inst : instances)
        if (applicable_for_execution(branch.state, inst, options.semantics, assumed))
          candidates.push_back(inst);

      std::vector<std::vector<DefaultInstance>> choices =
          execute_choices(branch.state, candidates, options.semantics, outcome.diagnostics);
      // an empty (or all-blocked) choice makes no progress; the revisit
      // guard above will then end the branch
      if (choices.size() == 1) {
        branch.state = execute_defaults(branch.state, choices.front());
        branch.trace.push_back(TraceStep{"execute", ids_of(choices.front())});
        continue;
      }
      std::vector<Branch> children;
      for (const std::vector<DefaultInstance>& choice : choices) {
        Branch child = branch;
        child.state = execute_defaults(child.state, choice);
        child.trace.push_back(TraceStep{"execute", ids_of(choice)});
        children.push_back(std::move(child));
      }
      fork(children);
      alive = false;
      break;
    }
  }

  // deduplicate by fact set, deterministically
  std::sort(found.begin(), found.end(), [](const Extension& a, const Extension& b) {
    auto fa = a.fact_set(), fb = b.fact_set();
    if (fa != fb) return fa < fb;
    if (a.trace.size() != b.trace.size()) return a.trace.size() < b.trace.size();
    return false;
  });
  for (Extension& e : found) {
    if (!outcome.extensions.empty() && outcome.extensions.back().fact_set() == e.fact_set())
      continue;
    outcome.extensions.push_back(std::move(e));
  }

  if (options.mode == Mode::Skeptical && !outcome.extensions.empty()) {
    std::set<Literal> core = outcome.extensions.front().fact_set();
    for (std::size_t i = 1; i < outcome.extensions.size(); ++i) {
      std::set<Literal> next = outcome.extensions[i].fact_set();
      std::set<Literal> inter;
      std::set_intersection(core.begin(), core.end(), next.begin(), next.end(),
                            std::inserter(inter, inter.begin()));
      core = std::move(inter);
    }
    outcome.skeptical_core = std::move(core);
  }
  return outcome;
}

}  // namespace bdl
