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

#ifndef BDL_GROUNDING_HPP
#define BDL_GROUNDING_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bdl/rule.hpp"

namespace bdl {

/// A closed default: the parent rule with all variables bound to named
/// constants. Identity is (rule name, substitution).
struct DefaultInstance {
  std::string rule;  // parent rule name
  Substitution binding;
  std::vector<Literal> prerequisite;
  std::vector<Literal> justifications;
  std::vector<Literal> conclusions;
  Priority order;

  std::string id() const {
    std::string s = rule;
    if (!binding.empty()) {
      s += '[';
      bool first = true;
      for (const auto& [var, val] : binding) {
        if (!first) s += ',';
        first = false;
        s += var + "=" + val.name;
      }
      s += ']';
    }
    return s;
  }

  auto operator<=>(const DefaultInstance&) const = default;
};

struct GroundingLimitError : std::runtime_error {
  explicit GroundingLimitError(const std::string& rule, std::int64_t cap)
      : std::runtime_error("grounding limit of " + std::to_string(cap) +
                           " instances exceeded while instantiating rule '" + rule + "'") {}
};

/// Instantiates every default over the named constants of the theory.
/// Restricted semantics: variables range over explicitly introduced
/// individuals only, so no new individuals are ever invented. Throws
/// GroundingLimitError when the instance count would exceed the cap.
inline std::vector<DefaultInstance> ground_defaults(const DefaultTheory& theory,
                                                    std::int64_t max_instances = 100000) {
  std::vector<DefaultInstance> out;
  std::vector<std::string> consts(theory.constants.begin(), theory.constants.end());
  std::int64_t total = 0;
  for (const DefaultRule& d : theory.defaults) {
    std::set<std::string> var_set = variables_of(d.prerequisite);
    for (const std::string& v : variables_of(d.justifications)) var_set.insert(v);
    for (const std::string& v : variables_of(d.conclusions)) var_set.insert(v);
    std::vector<std::string> vars(var_set.begin(), var_set.end());

    if (!vars.empty() && consts.empty()) continue;  // empty Herbrand domain

    std::int64_t count = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      count *= static_cast<std::int64_t>(consts.size());
      if (count > max_instances) throw GroundingLimitError(d.name, max_instances);
    }
    total += count;
    if (total > max_instances) throw GroundingLimitError(d.name, max_instances);

    std::vector<std::size_t> idx(vars.size(), 0);
    while (true) {
      Substitution binding;
      for (std::size_t i = 0; i < vars.size(); ++i)
        binding.emplace(vars[i], Term::constant(consts[idx[i]]));
      DefaultInstance inst;
      inst.rule = d.name;
      inst.binding = binding;
      for (const Literal& l : d.prerequisite) inst.prerequisite.push_back(substitute(binding, l));
      for (const Literal& l : d.justifications) inst.justifications.push_back(substitute(binding, l));
      for (const Literal& l : d.conclusions) inst.conclusions.push_back(substitute(binding, l));
      inst.order = d.order;
      out.push_back(std::move(inst));

      // advance the odometer
      std::size_t i = 0;
      for (; i < vars.size(); ++i) {
        if (++idx[i] < consts.size()) break;
        idx[i] = 0;
      }
      if (i == vars.size()) break;
    }
  }
  return out;
}

}  // namespace bdl

#endif  // BDL_GROUNDING_HPP
