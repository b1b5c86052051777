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

#ifndef BDL_ENGINE_HPP
#define BDL_ENGINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bdl/conflict.hpp"
#include "bdl/grounding.hpp"
#include "bdl/state.hpp"

namespace bdl {

enum class Mode { Credulous, Skeptical };
enum class Semantics { Joint, Reiter };

inline const char* to_string(Mode m) { return m == Mode::Credulous ? "credulous" : "skeptical"; }
inline const char* to_string(Semantics s) { return s == Semantics::Joint ? "joint" : "reiter"; }

struct EngineOptions {
  Mode mode = Mode::Credulous;
  Semantics semantics = Semantics::Joint;
  int max_steps = 1000;       // loop iterations per branch
  int max_branches = 64;      // total branches explored
  std::int64_t max_ground_instances = 100000;
  bool dump_conflicts = false;
};

struct TraceStep {
  std::string kind;    // execute | conflict | sweep | reduce
  std::string detail;
};

/// A fixed point reached by one branch: the final state plus the step
/// trace that replays to it from E_0.
struct Extension {
  ReasonerState state;
  std::vector<TraceStep> trace;

  std::set<Literal> fact_set() const {
    std::set<Literal> out;
    for (const auto& [lit, rec] : state.facts()) out.insert(lit);
    return out;
  }
};

struct Diagnostics {
  int cycle_branches = 0;         // branches halted by the oscillation guard
  int unresolvable_branches = 0;  // conflicts rooted in asserted knowledge
  bool step_limit_hit = false;
  bool branch_limit_hit = false;
  std::string grounding_error;
  std::vector<std::string> notes;

  bool cap_tripped() const {
    return step_limit_hit || branch_limit_hit || !grounding_error.empty();
  }
};

struct ReasoningOutcome {
  Mode mode = Mode::Credulous;
  Semantics semantics = Semantics::Joint;
  std::vector<Extension> extensions;  // deduplicated by fact set, canonically sorted
  std::set<Literal> skeptical_core;   // intersection of all extension fact sets
  Diagnostics diagnostics;
  std::vector<std::string> conflict_dumps;  // conflict-tree JSON when requested
};

/// Instances that may fire next: prerequisite entailed, no justification
/// complement entailed, at least one conclusion absent, not blocked by a
/// tombstone, and (under joint semantics) jointly satisfiable with the
/// assumed justifications of equal or higher order.
std::vector<DefaultInstance> applicable_instances(const ReasonerState& state,
                                                  const std::vector<DefaultInstance>& instances,
                                                  Semantics semantics);

/// Default-supported facts whose support assumed a justification whose
/// complement is now entailed; each pair feeds consequence removal.
std::vector<SupportRef> justification_check(const ReasonerState& state);

/// One Eq.-6 reduction candidate: a default conclusion standing in the way
/// of a strictly higher-order rule, to be retracted and tombstoned.
struct Reduction {
  Literal fact;
  std::vector<SupportRef> cuts;  // the fact's default supports
  Priority block;                // order of the strongest hindered instance
  std::string hindered;          // instance ids, for the trace
};

std::vector<Reduction> pending_reductions(const ReasonerState& state,
                                          const std::vector<DefaultInstance>& instances,
                                          Semantics semantics);

/// Applies Eq. 6: retracts every pending reduction and tombstones the
/// removed conclusions so only higher-priority rules may restore them.
ReasonerState extension_select(const ReasonerState& state,
                               const std::vector<DefaultInstance>& instances,
                               Semantics semantics, int step = 0);

/// Applies Eq. 7 for a chosen instance set: asserts every conclusion with
/// full provenance and re-closes. Choices must be applicable.
ReasonerState execute_defaults(const ReasonerState& state,
                               const std::vector<DefaultInstance>& chosen);

/// Consistent, no violated justification, no applicable instance, and no
/// pending Eq.-6 reduction.
bool is_fixed_point(const ReasonerState& state, const std::vector<DefaultInstance>& instances,
                    Semantics semantics);

/// The full control loop: expands E_0 = Th(W) branch by branch until every
/// branch reaches a fixed point, dies unresolvable, or trips a guard.
ReasoningOutcome compute_extensions(const DefaultTheory& theory, const EngineOptions& options = {});

}  // namespace bdl

#endif  // BDL_ENGINE_HPP
