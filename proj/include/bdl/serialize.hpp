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

#ifndef BDL_SERIALIZE_HPP
#define BDL_SERIALIZE_HPP

#include <string>

#include "bdl/engine.hpp"

namespace bdl {

/// Stable JSON form of a reasoning outcome: extensions sorted by canonical
/// literal order, every fact carrying status, supporting rules, and order
/// values. Byte-deterministic for equal outcomes.
std::string serialize_outcome(const ReasoningOutcome& outcome);

/// Plain-text summary for terminal use.
std::string format_outcome_text(const ReasoningOutcome& outcome);

}  // namespace bdl

#endif  // BDL_SERIALIZE_HPP
