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

#include "bdl/explain.hpp"

#include "json.hpp"

namespace bdl {
namespace {

ExplanationTree unfold(const ReasonerState& state, const Literal& l, std::set<Literal>& path) {
  ExplanationTree tree;
  tree.root = l;
  auto it = state.facts().find(l);
  if (it == state.facts().end()) return tree;
  path.insert(l);
  for (const Support& s : it->second.supports) {
    if (s.kind == SupportKind::Asserted) {
      tree.asserted = true;
      continue;
    }
    bool cyclic = false;
    for (const Literal& p : s.premises)
      if (path.count(p)) {
        cyclic = true;  // not a well-founded alternative along this path
        break;
      }
    if (cyclic) continue;
    ExplanationTree::Derivation d;
    d.rule = s.rule;
    d.instance = s.instance;
    d.order = s.order;
    d.justifications_assumed.assign(s.justifications.begin(), s.justifications.end());
    for (const Literal& p : s.premises) d.premises.push_back(unfold(state, p, path));
    tree.derivations.push_back(std::move(d));
  }
  path.erase(l);
  return tree;
}

void render_text(const ExplanationTree& tree, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += tree.root.to_string();
  if (tree.asserted && tree.derivations.empty()) {
    out += " (asserted)\n";
    return;
  }
  if (tree.asserted) out += " (asserted)";
  out += '\n';
  for (const ExplanationTree::Derivation& d : tree.derivations) {
    out.append(static_cast<std::size_t>(depth) * 2 + 2, ' ');
    out += "by " + (d.instance.empty() ? d.rule : d.instance) + " [order=" + d.order.to_string() + "]";
    if (!d.justifications_assumed.empty()) {
      out += " assuming ";
      for (std::size_t i = 0; i < d.justifications_assumed.size(); ++i) {
        if (i) out += ", ";
        out += d.justifications_assumed[i].to_string();
      }
    }
    out += '\n';
    for (const ExplanationTree& p : d.premises) render_text(p, depth + 2, out);
  }
}

nlohmann::json tree_to_json(const ExplanationTree& tree) {
  nlohmann::json j;
  j["literal"] = tree.root.to_string();
  j["asserted"] = tree.asserted;
  nlohmann::json ds = nlohmann::json::array();
  for (const ExplanationTree::Derivation& d : tree.derivations) {
    nlohmann::json dj;
    dj["rule"] = d.rule;
    if (!d.instance.empty()) dj["instance"] = d.instance;
    dj["order"] = d.order.is_infinite() ? nlohmann::json("inf") : nlohmann::json(d.order.to_double());
    nlohmann::json js = nlohmann::json::array();
    for (const Literal& l : d.justifications_assumed) js.push_back(l.to_string());
    dj["justifications"] = std::move(js);
    nlohmann::json ps = nlohmann::json::array();
    for (const ExplanationTree& p : d.premises) ps.push_back(tree_to_json(p));
    dj["premises"] = std::move(ps);
    ds.push_back(std::move(dj));
  }
  j["derivations"] = std::move(ds);
  return j;
}

}  // namespace

Explanation explain(const Extension& ext, const Literal& l) {
  Explanation out;
  if (ext.state.has_fact(l)) {
    out.present = true;
    std::set<Literal> path;
    out.tree = unfold(ext.state, l, path);
    return out;
  }
  out.present = false;
  AbsenceReport report;
  auto it = ext.state.removal_log().find(l);
  if (it != ext.state.removal_log().end()) {
    report.ever_present = true;
    report.removal_kind = to_string(it->second.kind);
    report.detail = it->second.detail;
    report.step = it->second.step;
  }
  out.absence = report;
  return out;
}

std::string render(const Explanation& explanation, RenderFormat format) {
  if (format == RenderFormat::Text) {
    if (explanation.present && explanation.tree) {
      std::string out;
      render_text(*explanation.tree, 0, out);
      return out;
    }
    const AbsenceReport& r = *explanation.absence;
    if (!r.ever_present) return "not present (never derived)\n";
    return "not present (removed at step " + std::to_string(r.step) + " by " + r.removal_kind +
           ": " + r.detail + ")\n";
  }
  nlohmann::json j;
  j["present"] = explanation.present;
  if (explanation.present && explanation.tree) {
    j["tree"] = tree_to_json(*explanation.tree);
  } else if (explanation.absence) {
    nlohmann::json a;
    a["ever_present"] = explanation.absence->ever_present;
    if (explanation.absence->ever_present) {
      a["removal"] = explanation.absence->removal_kind;
      a["detail"] = explanation.absence->detail;
      a["step"] = explanation.absence->step;
    }
    j["absence"] = std::move(a);
  }
  return j.dump(2);
}

}  // namespace bdl
