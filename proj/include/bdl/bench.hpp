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

#ifndef BDL_BENCH_HPP
#define BDL_BENCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "bdl/engine.hpp"

namespace bdl {

/// One corpus case: a KB file plus the expectations from its
/// `<name>.expected.json` sidecar.
struct CorpusCase {
  int id = 0;
  std::string name;
  std::string kb_path;
  std::optional<int> extension_count;
  std::vector<Literal> all_contain;                        // in every extension
  std::vector<std::vector<Literal>> some_extension_contains;  // each set in some extension
  std::vector<Literal> absent_from_all;
  std::optional<std::set<Literal>> exact_facts;  // every extension equals this set
};

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string message;  // first failed expectation, empty on pass
  double millis = 0.0;
  ReasoningOutcome outcome;
};

/// Scans a directory for `*.bdl` files with expectation sidecars, sorted
/// by file name. Throws std::runtime_error on malformed sidecars.
std::vector<CorpusCase> load_corpus(const std::string& dir);

CaseResult run_case(const CorpusCase& c, const EngineOptions& options);

}  // namespace bdl

#endif  // BDL_BENCH_HPP
