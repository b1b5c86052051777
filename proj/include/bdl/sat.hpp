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

#ifndef BDL_SAT_HPP
#define BDL_SAT_HPP

#include <cstdlib>
#include <map>
#include <vector>

#include "bdl/term.hpp"

namespace bdl {

/// Ground clause set over literal atoms. A strong-negative literal is the
/// negation of its atom; satisfiability is decided by unit propagation
/// plus branching, which is exhaustive at the sizes we handle.
class ClauseSet {
 public:
  // encoded literal: +v / -v for atom id v (ids start at 1)
  using Clause = std::vector<int>;

  int atom_id(const Literal& l) {
    Literal a = l.atom();
    auto [it, inserted] = ids_.emplace(a, static_cast<int>(ids_.size()) + 1);
    return it->second;
  }

  int encode(const Literal& l) { return l.negated ? -atom_id(l) : atom_id(l); }

  void add_unit(const Literal& l) { clauses_.push_back({encode(l)}); }

  void add_clause(const std::vector<Literal>& lits) {
    Clause c;
    for (const Literal& l : lits) c.push_back(encode(l));
    clauses_.push_back(std::move(c));
  }

  std::size_t clause_count() const { return clauses_.size(); }
  std::size_t atom_count() const { return ids_.size(); }

  bool satisfiable() const {
    std::vector<int> assign(ids_.size() + 1, 0);  // 0 unknown, 1 true, -1 false
    return solve(assign);
  }

  /// True when every model of the clause set satisfies l.
  bool entails(const Literal& l) {
    ClauseSet probe = *this;
    probe.add_unit(l.complement());
    return !probe.satisfiable();
  }

 private:
  bool solve(std::vector<int>& assign) const {
    // unit propagation to fixpoint
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Clause& c : clauses_) {
        int unassigned = 0, last = 0;
        bool sat = false;
        for (int lit : c) {
          int v = std::abs(lit);
          int want = lit > 0 ? 1 : -1;
          if (assign[v] == want) {
            sat = true;
            break;
          }
          if (assign[v] == 0) {
            ++unassigned;
            last = lit;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return false;  // conflict
        if (unassigned == 1) {
          assign[std::abs(last)] = last > 0 ? 1 : -1;
          changed = true;
        }
      }
    }
    for (std::size_t v = 1; v < assign.size(); ++v) {
      if (assign[v] != 0) continue;
      std::vector<int> trial = assign;
      trial[v] = 1;
      if (solve(trial)) return true;
      trial = assign;
      trial[v] = -1;
      return solve(trial);
    }
    return true;
  }

  std::map<Literal, int> ids_;
  std::vector<Clause> clauses_;
};

}  // namespace bdl

#endif  // BDL_SAT_HPP
