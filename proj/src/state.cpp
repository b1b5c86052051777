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

#include "bdl/state.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bdl {

ReasonerState ReasonerState::from_theory(const DefaultTheory& theory) {
  ReasonerState st;
  st.theory_ = &theory;
  for (const Literal& f : theory.facts) {
    FactRecord rec;
    rec.literal = f;
    rec.supports.insert(Support::asserted());
    st.facts_.emplace(f, std::move(rec));
  }
  st.close();
  return st;
}

void ReasonerState::assert_fact(const Literal& l, const Support& s) {
  tombstones_.erase(l);  // the literal is present again
  FactRecord& rec = facts_[l];
  rec.literal = l;
  rec.supports.insert(s);
  if (s.kind == SupportKind::Default) ledger_.insert(LedgerEntry{l, s.rule, s.order});
  close();
}

void ReasonerState::close() {
  if (!theory_) return;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const StrictRule& rule : theory_->strict_rules) {
      // enumerate all body matches against the current facts
      std::vector<Substitution> bindings{Substitution{}};
      std::vector<std::vector<Literal>> premise_rows{{}};
      for (const Literal& pattern : rule.body) {
        std::vector<Substitution> next;
        std::vector<std::vector<Literal>> next_rows;
        for (std::size_t i = 0; i < bindings.size(); ++i) {
          for (const auto& [fact, rec] : facts_) {
            Substitution trial = bindings[i];
            if (!match_into(pattern, fact, trial)) continue;
            next.push_back(std::move(trial));
            auto row = premise_rows[i];
            row.push_back(fact);
            next_rows.push_back(std::move(row));
          }
        }
        bindings = std::move(next);
        premise_rows = std::move(next_rows);
        if (bindings.empty()) break;
      }
      for (std::size_t i = 0; i < bindings.size(); ++i) {
        Literal head = substitute(bindings[i], rule.head);
        Support s;
        s.kind = SupportKind::Strict;
        s.rule = rule.name;
        s.premises.insert(premise_rows[i].begin(), premise_rows[i].end());
        s.order = Priority::infinity();
        if (s.premises.count(head)) continue;  // self-premise, never well-founded
        auto it = facts_.find(head);
        if (it == facts_.end()) {
          tombstones_.erase(head);
          FactRecord rec;
          rec.literal = head;
          rec.supports.insert(std::move(s));
          facts_.emplace(head, std::move(rec));
          changed = true;
        } else if (it->second.supports.insert(std::move(s)).second) {
          changed = true;
        }
      }
    }
  }
}

ClauseSet ReasonerState::clause_set() const {
  ClauseSet cs;
  for (const auto& [lit, rec] : facts_) cs.add_unit(lit);
  if (theory_)
    for (const DisjunctiveFact& d : theory_->disjunctive_facts) cs.add_clause(d.disjuncts);
  return cs;
}

bool ReasonerState::entails(const Literal& l) const {
  if (facts_.count(l)) return true;
  if (!theory_ || theory_->disjunctive_facts.empty()) return false;
  return clause_set().entails(l);
}

std::set<Literal> ReasonerState::grounded_facts() const {
  std::set<Literal> grounded;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lit, rec] : facts_) {
      if (grounded.count(lit)) continue;
      for (const Support& s : rec.supports) {
        bool ok = true;
        for (const Literal& p : s.premises)
          if (!grounded.count(p)) {
            ok = false;
            break;
          }
        if (ok) {
          grounded.insert(lit);
          changed = true;
          break;
        }
      }
    }
  }
  return grounded;
}

FactStatus ReasonerState::status(const Literal& l) const {
  auto it = facts_.find(l);
  if (it == facts_.end()) throw std::logic_error("status of absent fact " + l.to_string());
  for (const Support& s : it->second.supports)
    if (s.kind == SupportKind::Asserted) return FactStatus::Asserted;

  // non-default facts: reachable from assertions through strict supports only
  std::set<Literal> non_default;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lit, rec] : facts_) {
      if (non_default.count(lit)) continue;
      for (const Support& s : rec.supports) {
        if (s.kind == SupportKind::Default) continue;
        bool ok = true;
        for (const Literal& p : s.premises)
          if (!non_default.count(p)) {
            ok = false;
            break;
          }
        if (ok) {
          non_default.insert(lit);
          changed = true;
          break;
        }
      }
    }
  }
  return non_default.count(l) ? FactStatus::Strict : FactStatus::Default;
}

std::map<Literal, Priority> ReasonerState::assumed_justifications() const {
  std::map<Literal, Priority> assumed;
  for (const auto& [lit, rec] : facts_)
    for (const Support& s : rec.supports) {
      if (s.kind != SupportKind::Default) continue;
      for (const Literal& j : s.justifications) {
        auto [it, inserted] = assumed.emplace(j, s.order);
        if (!inserted && it->second < s.order) it->second = s.order;
      }
    }
  return assumed;
}

std::optional<ConflictCore> ReasonerState::find_conflict() const {
  // complementary pair first
  for (const auto& [lit, rec] : facts_) {
    if (lit.negated) continue;
    Literal neg = lit.complement();
    if (facts_.count(neg)) {
      ConflictCore core;
      core.is_pair = true;
      core.facts = {lit, neg};
      core.default_reason = status(lit) == FactStatus::Default || status(neg) == FactStatus::Default;
      return core;
    }
  }
  if (!theory_ || theory_->disjunctive_facts.empty()) return std::nullopt;
  if (clause_set().satisfiable()) return std::nullopt;

  // minimal unsatisfiable subset of facts + disjunctive facts, smallest
  // cardinality first when the item count allows exhaustive search
  struct Item {
    bool is_fact;
    Literal fact;
    DisjunctiveFact disj;
  };
  std::vector<Item> items;
  for (const auto& [lit, rec] : facts_) items.push_back({true, lit, {}});
  for (const DisjunctiveFact& d : theory_->disjunctive_facts) items.push_back({false, {}, d});

  auto unsat_subset = [&](const std::vector<std::size_t>& subset) {
    ClauseSet cs;
    for (std::size_t i : subset) {
      if (items[i].is_fact)
        cs.add_unit(items[i].fact);
      else
        cs.add_clause(items[i].disj.disjuncts);
    }
    return !cs.satisfiable();
  };

  std::vector<std::size_t> chosen;
  if (items.size() <= 16) {
    std::vector<std::size_t> best;
    std::size_t n = items.size();
    for (std::size_t k = 2; k <= n && best.empty(); ++k) {
      std::vector<std::size_t> idx(k);
      std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) return unsat_subset(idx);
        for (std::size_t i = start; i < n; ++i) {
          idx[pos] = i;
          if (rec(pos + 1, i + 1)) return true;
        }
        return false;
      };
      if (rec(0, 0)) best = idx;
    }
    chosen = best;
  } else {
    // deletion-based minimization
    for (std::size_t i = 0; i < items.size(); ++i) chosen.push_back(i);
    for (std::size_t i = 0; i < chosen.size();) {
      std::vector<std::size_t> trial = chosen;
      trial.erase(trial.begin() + static_cast<long>(i));
      if (unsat_subset(trial))
        chosen = trial;
      else
        ++i;
    }
  }

  ConflictCore core;
  for (std::size_t i : chosen) {
    if (items[i].is_fact) {
      core.facts.push_back(items[i].fact);
      if (status(items[i].fact) == FactStatus::Default) core.default_reason = true;
    } else {
      core.disjuncts.push_back(items[i].disj);
    }
  }
  return core;
}

std::set<Literal> ReasonerState::retract_supports(const std::vector<SupportRef>& cuts,
                                                  RemovalKind kind, const std::string& detail,
                                                  int step) {
  for (const SupportRef& cut : cuts) {
    auto it = facts_.find(cut.fact);
    if (it == facts_.end()) continue;
    it->second.supports.erase(cut.support);
  }

  // prune everything left without a well-founded explanation
  std::set<Literal> removed;
  while (true) {
    std::set<Literal> grounded = grounded_facts();
    std::vector<Literal> doomed;
    for (const auto& [lit, rec] : facts_)
      if (!grounded.count(lit)) doomed.push_back(lit);
    if (doomed.empty()) break;
    for (const Literal& lit : doomed) {
      facts_.erase(lit);
      removed.insert(lit);
    }
    // drop supports that cite a premise no longer in the state
    for (auto& [lit, rec] : facts_) {
      for (auto it = rec.supports.begin(); it != rec.supports.end();) {
        bool dangling = false;
        for (const Literal& p : it->premises)
          if (!facts_.count(p)) {
            dangling = true;
            break;
          }
        it = dangling ? rec.supports.erase(it) : ++it;
      }
    }
  }

  for (const Literal& lit : removed)
    removals_[lit] = RemovalEvent{RemovalKind::Cascade, "support lost: " + detail, step};
  for (const SupportRef& cut : cuts)
    if (removed.count(cut.fact)) removals_[cut.fact] = RemovalEvent{kind, detail, step};

  // ledger entries of removed conclusions go to the history set
  for (auto it = ledger_.begin(); it != ledger_.end();) {
    if (removed.count(it->literal)) {
      ledger_history_.insert(*it);
      it = ledger_.erase(it);
    } else {
      ++it;
    }
  }
  // tombstones whose blocker left the state no longer apply
  for (auto it = tombstones_.begin(); it != tombstones_.end();) {
    bool cleared = false;
    for (const Literal& b : it->second.blockers)
      if (removed.count(b)) {
        cleared = true;
        break;
      }
    it = cleared ? tombstones_.erase(it) : ++it;
  }
  close();
  return removed;
}

void ReasonerState::add_tombstone(const Literal& l, Priority block, std::set<Literal> blockers) {
  if (facts_.count(l)) return;  // tombstones apply to absent literals only
  auto it = tombstones_.find(l);
  if (it == tombstones_.end()) {
    tombstones_.emplace(l, Tombstone{block, std::move(blockers)});
  } else {
    if (it->second.block < block) it->second.block = block;
    it->second.blockers.insert(blockers.begin(), blockers.end());
  }
}

std::string ReasonerState::state_key() const {
  std::string key;
  for (const auto& [lit, rec] : facts_) {
    key += lit.to_string();
    key += '{';
    for (const Support& s : rec.supports) {
      key += s.rule;
      key += '/';
      key += s.instance;
      key += '(';
      for (const Literal& p : s.premises) {
        key += p.to_string();
        key += ' ';
      }
      key += ')';
    }
    key += "} ";
  }
  key += "|ts:";
  for (const auto& [lit, ts] : tombstones_) {
    key += lit.to_string() + "@" + ts.block.to_string();
    for (const Literal& b : ts.blockers) key += "<" + b.to_string();
    key += ' ';
  }
  key += "|c:";
  for (const LedgerEntry& e : ledger_) key += e.literal.to_string() + "@" + e.rule + " ";
  key += "|h:";
  for (const LedgerEntry& e : ledger_history_) key += e.literal.to_string() + "@" + e.rule + " ";
  return key;
}

}  // namespace bdl
