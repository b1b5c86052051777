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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bdl/bench.hpp"
#include "bdl/explain.hpp"
#include "bdl/parser.hpp"
#include "bdl/serialize.hpp"
#include "json.hpp"

namespace {

// exit codes: 0 ok, 1 bench failure, 2 parse error, 3 unresolvable-only,
// 4 resource cap tripped
constexpr int kExitOk = 0;
constexpr int kExitBenchFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnresolvable = 3;
constexpr int kExitCap = 4;

struct CommonOpts {
  std::string mode = "credulous";
  std::string semantics = "joint";
  bool json = false;
  bool dump_conflicts = false;
  int max_steps = 1000;
  int max_branches = 64;
  long long max_ground = 100000;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--mode", opts.mode, "credulous or skeptical")
      ->check(CLI::IsMember({"credulous", "skeptical"}));
  cmd->add_option("--semantics", opts.semantics, "joint or reiter")
      ->check(CLI::IsMember({"joint", "reiter"}));
  cmd->add_flag("--json", opts.json, "machine-readable output on stdout");
  cmd->add_flag("--dump-conflicts", opts.dump_conflicts, "include conflict trees in the output");
  cmd->add_option("--max-steps", opts.max_steps, "loop iteration cap per branch");
  cmd->add_option("--max-branches", opts.max_branches, "total branch cap");
  cmd->add_option("--max-ground-instances", opts.max_ground, "grounding cap");
}

bdl::EngineOptions engine_options(const CommonOpts& opts) {
  bdl::EngineOptions eo;
  eo.mode = opts.mode == "skeptical" ? bdl::Mode::Skeptical : bdl::Mode::Credulous;
  eo.semantics = opts.semantics == "reiter" ? bdl::Semantics::Reiter : bdl::Semantics::Joint;
  eo.max_steps = opts.max_steps;
  eo.max_branches = opts.max_branches;
  eo.max_ground_instances = opts.max_ground;
  eo.dump_conflicts = opts.dump_conflicts;
  return eo;
}

std::optional<bdl::DefaultTheory> load_theory(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return std::nullopt;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  bdl::ParseResult parsed = bdl::parse_kb(ss.str());
  if (!parsed.ok()) {
    std::cerr << path << ":" << parsed.error->format() << "\n";
    return std::nullopt;
  }
  return parsed.theory;
}

int outcome_exit_code(const bdl::ReasoningOutcome& outcome) {
  if (outcome.diagnostics.cap_tripped()) return kExitCap;
  if (outcome.extensions.empty() && outcome.diagnostics.unresolvable_branches > 0)
    return kExitUnresolvable;
  return kExitOk;
}

int cmd_reason(const std::string& kb, const CommonOpts& opts) {
  auto theory = load_theory(kb);
  if (!theory) return kExitParse;
  bdl::ReasoningOutcome outcome = bdl::compute_extensions(*theory, engine_options(opts));
  if (opts.json)
    std::cout << bdl::serialize_outcome(outcome);
  else
    std::cout << bdl::format_outcome_text(outcome);
  return outcome_exit_code(outcome);
}

int cmd_explain(const std::string& kb, const std::string& literal_text, const CommonOpts& opts) {
  auto theory = load_theory(kb);
  if (!theory) return kExitParse;
  auto literal = bdl::parse_ground_literal(literal_text);
  if (!literal) {
    std::cerr << "error: '" << literal_text << "' is not a ground literal\n";
    return kExitParse;
  }
  bdl::ReasoningOutcome outcome = bdl::compute_extensions(*theory, engine_options(opts));
  if (opts.json) {
    nlohmann::json report = nlohmann::json::array();
    for (std::size_t i = 0; i < outcome.extensions.size(); ++i) {
      bdl::Explanation ex = bdl::explain(outcome.extensions[i], *literal);
      nlohmann::json entry = nlohmann::json::parse(bdl::render(ex, bdl::RenderFormat::Json));
      entry["extension"] = i;
      report.push_back(std::move(entry));
    }
    std::cout << report.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < outcome.extensions.size(); ++i) {
      std::cout << "extension " << i << ":\n";
      bdl::Explanation ex = bdl::explain(outcome.extensions[i], *literal);
      std::cout << bdl::render(ex, bdl::RenderFormat::Text);
    }
    if (outcome.extensions.empty()) std::cout << "no extensions\n";
  }
  return outcome_exit_code(outcome);
}

int cmd_check(const std::string& kb) {
  auto theory = load_theory(kb);
  if (!theory) return kExitParse;
  std::cout << "ok: " << theory->facts.size() << " fact(s), "
            << theory->disjunctive_facts.size() << " disjunctive fact(s), "
            << theory->strict_rules.size() << " strict rule(s), " << theory->defaults.size()
            << " default(s)\n";
  return kExitOk;
}

int cmd_bench(const std::string& dir, const CommonOpts& opts) {
  std::vector<bdl::CorpusCase> cases;
  try {
    cases = bdl::load_corpus(dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBenchFail;
  }
  if (cases.empty()) {
    std::cerr << "error: no corpus cases under " << dir << "\n";
    return kExitBenchFail;
  }
  bool all_pass = true;
  nlohmann::json report = nlohmann::json::array();
  for (const bdl::CorpusCase& c : cases) {
    bdl::CaseResult r = bdl::run_case(c, engine_options(opts));
    all_pass = all_pass && r.pass;
    if (opts.json) {
      nlohmann::json entry;
      entry["case"] = r.name;
      entry["pass"] = r.pass;
      if (!r.pass) entry["message"] = r.message;
      entry["outcome"] = nlohmann::json::parse(bdl::serialize_outcome(r.outcome));
      report.push_back(std::move(entry));
    } else {
      std::printf("%-22s %s  (%.1f ms)%s%s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                  r.millis, r.pass ? "" : "  ", r.pass ? "" : r.message.c_str());
    }
  }
  if (opts.json) std::cout << report.dump(2) << "\n";
  return all_pass ? kExitOk : kExitBenchFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prioritized default logic reasoner"};
  app.require_subcommand(1);

  CommonOpts opts;

  std::string kb_path, literal_text, corpus_dir;
  CLI::App* reason = app.add_subcommand("reason", "compute the extensions of a knowledge base");
  reason->add_option("kb", kb_path, "path to a .bdl file")->required();
  add_common(reason, opts);

  CLI::App* explain = app.add_subcommand("explain", "explain one fact across all extensions");
  explain->add_option("kb", kb_path, "path to a .bdl file")->required();
  explain->add_option("literal", literal_text, "ground literal, e.g. '-flies(tweety)'")->required();
  add_common(explain, opts);

  CLI::App* check = app.add_subcommand("check", "validate the syntax of a knowledge base");
  check->add_option("kb", kb_path, "path to a .bdl file")->required();

  CLI::App* bench = app.add_subcommand("bench", "run a corpus of cases with expectations");
  bench->add_option("corpus", corpus_dir, "directory of .bdl files with .expected.json sidecars")
      ->required();
  add_common(bench, opts);

  CLI11_PARSE(app, argc, argv);

  if (reason->parsed()) return cmd_reason(kb_path, opts);
  if (explain->parsed()) return cmd_explain(kb_path, literal_text, opts);
  if (check->parsed()) return cmd_check(kb_path);
  if (bench->parsed()) return cmd_bench(corpus_dir, opts);
  return kExitOk;
}
