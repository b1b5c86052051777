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

#include "bdl/serialize.hpp"

#include <set>

#include "json.hpp"

namespace bdl {
namespace {

nlohmann::json order_json(const Priority& p) {
  return p.is_infinite() ? nlohmann::json("inf") : nlohmann::json(p.to_double());
}

nlohmann::json extension_json(const Extension& ext) {
  nlohmann::json facts = nlohmann::json::array();
  for (const auto& [lit, rec] : ext.state.facts()) {
    nlohmann::json f;
    f["literal"] = lit.to_string();
    f["status"] = to_string(ext.state.status(lit));
    std::set<std::string> rules;
    struct PriorityLess {
      bool operator()(const Priority& a, const Priority& b) const { return a < b; }
    };
    std::set<Priority, PriorityLess> orders;
    for (const Support& s : rec.supports) {
      rules.insert(s.rule);
      orders.insert(s.order);
    }
    nlohmann::json rj = nlohmann::json::array();
    for (const std::string& r : rules) rj.push_back(r);
    f["rules"] = std::move(rj);
    nlohmann::json oj = nlohmann::json::array();
    for (const Priority& o : orders) oj.push_back(order_json(o));
    f["orders"] = std::move(oj);
    facts.push_back(std::move(f));
  }
  nlohmann::json trace = nlohmann::json::array();
  for (const TraceStep& step : ext.trace) {
    nlohmann::json t;
    t["kind"] = step.kind;
    t["detail"] = step.detail;
    trace.push_back(std::move(t));
  }
  nlohmann::json j;
  j["facts"] = std::move(facts);
  j["trace"] = std::move(trace);
  return j;
}

}  // namespace

std::string serialize_outcome(const ReasoningOutcome& outcome) {
  nlohmann::json j;
  j["mode"] = to_string(outcome.mode);
  j["semantics"] = to_string(outcome.semantics);
  nlohmann::json exts = nlohmann::json::array();
  for (const Extension& e : outcome.extensions) exts.push_back(extension_json(e));
  j["extensions"] = std::move(exts);
  if (outcome.mode == Mode::Skeptical) {
    nlohmann::json core = nlohmann::json::array();
    for (const Literal& l : outcome.skeptical_core) core.push_back(l.to_string());
    j["skeptical_core"] = std::move(core);
  }
  nlohmann::json d;
  d["cycle_branches"] = outcome.diagnostics.cycle_branches;
  d["unresolvable_branches"] = outcome.diagnostics.unresolvable_branches;
  d["step_limit_hit"] = outcome.diagnostics.step_limit_hit;
  d["branch_limit_hit"] = outcome.diagnostics.branch_limit_hit;
  if (!outcome.diagnostics.grounding_error.empty())
    d["grounding_error"] = outcome.diagnostics.grounding_error;
  nlohmann::json notes = nlohmann::json::array();
  for (const std::string& n : outcome.diagnostics.notes) notes.push_back(n);
  d["notes"] = std::move(notes);
  j["diagnostics"] = std::move(d);
  if (!outcome.conflict_dumps.empty()) {
    nlohmann::json dumps = nlohmann::json::array();
    for (const std::string& text : outcome.conflict_dumps)
      dumps.push_back(nlohmann::json::parse(text));
    j["conflicts"] = std::move(dumps);
  }
  return j.dump(2) + "\n";
}

std::string format_outcome_text(const ReasoningOutcome& outcome) {
  std::string out;
  out += "mode: " + std::string(to_string(outcome.mode)) +
         ", semantics: " + to_string(outcome.semantics) + "\n";
  out += "extensions: " + std::to_string(outcome.extensions.size()) + "\n";
  int idx = 0;
  for (const Extension& e : outcome.extensions) {
    out += "extension " + std::to_string(idx++) + ":\n";
    for (const auto& [lit, rec] : e.state.facts()) {
      out += "  " + lit.to_string() + "  [" + to_string(e.state.status(lit)) + "]\n";
    }
  }
  if (outcome.mode == Mode::Skeptical) {
    out += "skeptical core:\n";
    for (const Literal& l : outcome.skeptical_core) out += "  " + l.to_string() + "\n";
  }
  if (outcome.diagnostics.cycle_branches)
    out += "note: " + std::to_string(outcome.diagnostics.cycle_branches) +
           " branch(es) halted by the oscillation guard\n";
  if (outcome.diagnostics.unresolvable_branches)
    out += "note: " + std::to_string(outcome.diagnostics.unresolvable_branches) +
           " unresolvable branch(es)\n";
  return out;
}

}  // namespace bdl
