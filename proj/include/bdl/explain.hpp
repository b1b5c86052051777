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

#ifndef BDL_EXPLAIN_HPP
#define BDL_EXPLAIN_HPP

#include <optional>
#include <string>
#include <vector>

#include "bdl/engine.hpp"

namespace bdl {

/// Full support unfolding of one fact down to asserted leaves. Every
/// alternative explanation set is kept; leaves are assertions.
struct ExplanationTree {
  struct Derivation {
    std::string rule;
    std::string instance;  // empty for strict rules
    Priority order = Priority::infinity();
    std::vector<Literal> justifications_assumed;
    std::vector<ExplanationTree> premises;
  };

  Literal root;
  bool asserted = false;
  std::vector<Derivation> derivations;  // empty iff asserted-only leaf
};

/// Why a literal is absent from an extension, when the trace knows.
struct AbsenceReport {
  bool ever_present = false;
  std::string removal_kind;  // reduction | conflict-cut | justification-violation | cascade
  std::string detail;
  int step = 0;
};

struct Explanation {
  bool present = false;
  std::optional<ExplanationTree> tree;     // when present
  std::optional<AbsenceReport> absence;    // when absent
};

/// Unfolds the support graph of l inside the extension; reports the
/// removal event when l is not part of it.
Explanation explain(const Extension& ext, const Literal& l);

enum class RenderFormat { Text, Json };

/// Deterministic rendering: an indented proof tree with rule names and
/// orders, or the same structure as JSON.
std::string render(const Explanation& explanation, RenderFormat format);

}  // namespace bdl

#endif  // BDL_EXPLAIN_HPP
