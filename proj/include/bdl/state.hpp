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

#ifndef BDL_STATE_HPP
#define BDL_STATE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bdl/priority.hpp"
#include "bdl/rule.hpp"
#include "bdl/sat.hpp"

namespace bdl {

enum class SupportKind { Asserted, Strict, Default };

/// One explanation of a fact: the rule application that produced it.
/// Asserted supports have no premises; strict and asserted supports carry
/// infinite order, default supports the finite order of their rule.
struct Support {
  SupportKind kind = SupportKind::Asserted;
  std::string rule = "asserted";  // rule name
  std::string instance;           // ground default instance id, else empty
  std::set<Literal> premises;
  std::set<Literal> justifications;  // empty unless kind == Default
  Priority order = Priority::infinity();

  static Support asserted() { return Support{}; }

  friend bool operator<(const Support& a, const Support& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.rule != b.rule) return a.rule < b.rule;
    if (a.instance != b.instance) return a.instance < b.instance;
    if (a.premises != b.premises) return a.premises < b.premises;
    if (a.justifications != b.justifications) return a.justifications < b.justifications;
    return b.order < a.order ? false : a.order < b.order;
  }
  friend bool operator==(const Support& a, const Support& b) {
    return !(a < b) && !(b < a);
  }
};

/// asserted beats strict beats default; a fact is default exactly when
/// every explanation chain passes through at least one default conclusion.
enum class FactStatus { Asserted, Strict, Default };

inline const char* to_string(FactStatus s) {
  switch (s) {
    case FactStatus::Asserted: return "asserted";
    case FactStatus::Strict: return "strict";
    case FactStatus::Default: return "default";
  }
  return "?";
}

struct FactRecord {
  Literal literal;
  std::set<Support> supports;  // non-empty while the fact is in the state
};

/// C_n entry: one default conclusion together with its source and order.
struct LedgerEntry {
  Literal literal;
  std::string rule;
  Priority order;

  friend bool operator<(const LedgerEntry& a, const LedgerEntry& b) {
    if (a.literal != b.literal) return a.literal < b.literal;
    if (a.rule != b.rule) return a.rule < b.rule;
    return b.order < a.order ? false : a.order < b.order;
  }
};

/// Blocks re-derivation of a removed conclusion by instances whose order
/// does not exceed `block`; cleared when the literal returns or when a
/// blocker leaves the state.
struct Tombstone {
  Priority block;
  std::set<Literal> blockers;
};

enum class RemovalKind { Reduction, ConflictCut, JustificationViolation, Cascade };

inline const char* to_string(RemovalKind k) {
  switch (k) {
    case RemovalKind::Reduction: return "reduction";
    case RemovalKind::ConflictCut: return "conflict-cut";
    case RemovalKind::JustificationViolation: return "justification-violation";
    case RemovalKind::Cascade: return "cascade";
  }
  return "?";
}

struct RemovalEvent {
  RemovalKind kind = RemovalKind::Cascade;
  std::string detail;
  int step = 0;
};

/// Either a complementary pair both present, or a minimal unsatisfiable
/// subset of facts and disjunctive facts.
struct ConflictCore {
  bool is_pair = false;
  std::vector<Literal> facts;
  std::vector<DisjunctiveFact> disjuncts;
  bool default_reason = false;  // some fact member has default status
};

struct SupportRef {
  Literal fact;
  Support support;
};

/// The evolving extension candidate E_n: fact set with full provenance,
/// the default-conclusion ledger C_n, tombstones, and removal log.
/// A state is a value; every operation leaves it closed under the strict
/// rules of its theory.
class ReasonerState {
 public:
  ReasonerState() = default;

  /// E_0 = Th(W): asserts all of W and closes under strict rules.
  static ReasonerState from_theory(const DefaultTheory& theory);

  const DefaultTheory& theory() const { return *theory_; }
  const std::map<Literal, FactRecord>& facts() const { return facts_; }
  const std::map<Literal, Tombstone>& tombstones() const { return tombstones_; }
  const std::set<LedgerEntry>& ledger() const { return ledger_; }
  const std::set<LedgerEntry>& ledger_history() const { return ledger_history_; }
  const std::map<Literal, RemovalEvent>& removal_log() const { return removals_; }

  bool has_fact(const Literal& l) const { return facts_.count(l) != 0; }

  /// Adds a support for l (inserting the fact if new) and re-closes.
  void assert_fact(const Literal& l, const Support& s);

  /// Forward-chains strict rules to fixpoint with provenance. Idempotent.
  void close();

  /// True iff every model of the fact/disjunction clause set satisfies l.
  bool entails(const Literal& l) const;

  /// Satisfiability of all facts plus disjunctive facts; on inconsistency
  /// returns a minimal core, preferring a complementary pair.
  std::optional<ConflictCore> find_conflict() const;
  bool is_consistent() const { return !find_conflict().has_value(); }

  FactStatus status(const Literal& l) const;

  /// Facts reachable from assertions through live supports; used to decide
  /// status and to prune non-well-founded facts after retraction.
  std::set<Literal> grounded_facts() const;

  /// Justifications assumed by live default supports, keyed by literal with
  /// the strongest assuming order.
  std::map<Literal, Priority> assumed_justifications() const;

  /// Removes the given supports, then every fact left without a
  /// well-founded explanation, recording removal events; re-closes.
  /// Returns the set of literals that left the state.
  std::set<Literal> retract_supports(const std::vector<SupportRef>& cuts, RemovalKind kind,
                                     const std::string& detail, int step);

  /// Removes the supports of l matching `kill`, cascading consequences.
  /// Throws std::logic_error when l is asserted-only.
  template <typename Pred>
  std::set<Literal> retract_with_consequences(const Literal& l, Pred kill, RemovalKind kind,
                                              const std::string& detail, int step) {
    auto it = facts_.find(l);
    if (it == facts_.end()) return {};
    bool asserted_only = true;
    std::vector<SupportRef> cuts;
    for (const Support& s : it->second.supports) {
      if (s.kind != SupportKind::Asserted) asserted_only = false;
      if (kill(s)) cuts.push_back({l, s});
    }
    if (asserted_only) throw std::logic_error("cannot retract asserted fact " + l.to_string());
    return retract_supports(cuts, kind, detail, step);
  }

  void add_tombstone(const Literal& l, Priority block, std::set<Literal> blockers);

  /// Clause set over facts and disjunctive facts (strong negation as
  /// negated atom); extra unit literals may be layered on by callers.
  ClauseSet clause_set() const;

  /// Canonical serialization of everything the engine's decisions depend
  /// on; equal keys mean the loop revisited a state.
  std::string state_key() const;

 private:
  const DefaultTheory* theory_ = nullptr;
  std::map<Literal, FactRecord> facts_;
  std::map<Literal, Tombstone> tombstones_;
  std::set<LedgerEntry> ledger_;          // live C_n
  std::set<LedgerEntry> ledger_history_;  // reduced/removed entries, kept for bookkeeping
  std::map<Literal, RemovalEvent> removals_;
};

}  // namespace bdl

#endif  // BDL_STATE_HPP
