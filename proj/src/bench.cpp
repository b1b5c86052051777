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

#include "bdl/bench.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bdl/parser.hpp"
#include "json.hpp"

namespace bdl {
namespace {

Literal parse_expected_literal(const std::string& text, const std::string& file) {
  auto lit = parse_ground_literal(text);
  if (!lit) throw std::runtime_error(file + ": bad literal in expectations: " + text);
  return *lit;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<CorpusCase> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> kbs;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".bdl")
      kbs.push_back(entry.path());
  std::sort(kbs.begin(), kbs.end());

  std::vector<CorpusCase> cases;
  for (const fs::path& kb : kbs) {
    fs::path sidecar = kb;
    sidecar.replace_extension(".expected.json");
    if (!fs::exists(sidecar)) continue;

    nlohmann::json j = nlohmann::json::parse(read_file(sidecar.string()));
    CorpusCase c;
    c.name = kb.stem().string();
    c.kb_path = kb.string();
    c.id = j.value("id", 0);
    if (j.contains("extension_count") && !j["extension_count"].is_null())
      c.extension_count = j["extension_count"].get<int>();
    for (const auto& s : j.value("all_contain", nlohmann::json::array()))
      c.all_contain.push_back(parse_expected_literal(s.get<std::string>(), sidecar.string()));
    for (const auto& group : j.value("some_extension_contains", nlohmann::json::array())) {
      std::vector<Literal> lits;
      for (const auto& s : group)
        lits.push_back(parse_expected_literal(s.get<std::string>(), sidecar.string()));
      c.some_extension_contains.push_back(std::move(lits));
    }
    for (const auto& s : j.value("absent_from_all", nlohmann::json::array()))
      c.absent_from_all.push_back(parse_expected_literal(s.get<std::string>(), sidecar.string()));
    if (j.contains("exact_facts") && !j["exact_facts"].is_null()) {
      std::set<Literal> exact;
      for (const auto& s : j["exact_facts"])
        exact.insert(parse_expected_literal(s.get<std::string>(), sidecar.string()));
      c.exact_facts = std::move(exact);
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

CaseResult run_case(const CorpusCase& c, const EngineOptions& options) {
  CaseResult result;
  result.name = c.name;

  auto started = std::chrono::steady_clock::now();
  ParseResult parsed = parse_kb(read_file(c.kb_path));
  if (!parsed.ok()) {
    result.message = "parse error: " + parsed.error->format();
    return result;
  }
  ReasoningOutcome outcome = compute_extensions(*parsed.theory, options);
  result.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            started)
                      .count();

  auto fail = [&](const std::string& m) { result.message = m; };
  if (outcome.diagnostics.cap_tripped()) {
    fail("resource cap tripped");
  } else if (c.extension_count && static_cast<int>(outcome.extensions.size()) != *c.extension_count) {
    fail("expected " + std::to_string(*c.extension_count) + " extension(s), got " +
         std::to_string(outcome.extensions.size()));
  } else {
    std::vector<std::set<Literal>> fact_sets;
    for (const Extension& e : outcome.extensions) fact_sets.push_back(e.fact_set());
    for (const Literal& l : c.all_contain) {
      for (const auto& fs : fact_sets)
        if (!fs.count(l)) {
          fail("expected " + l.to_string() + " in every extension");
          break;
        }
      if (!result.message.empty()) break;
    }
    if (result.message.empty() && outcome.extensions.empty() &&
        (!c.all_contain.empty() || !c.some_extension_contains.empty() || c.exact_facts))
      fail("no extension produced");
    if (result.message.empty()) {
      for (const auto& group : c.some_extension_contains) {
        bool found = false;
        for (const auto& fs : fact_sets) {
          bool all = true;
          for (const Literal& l : group)
            if (!fs.count(l)) {
              all = false;
              break;
            }
          if (all) {
            found = true;
            break;
          }
        }
        if (!found) {
          std::string want;
          for (const Literal& l : group) want += l.to_string() + " ";
          fail("no extension contains: " + want);
          break;
        }
      }
    }
    if (result.message.empty()) {
      for (const Literal& l : c.absent_from_all)
        for (const auto& fs : fact_sets)
          if (fs.count(l)) {
            fail(l.to_string() + " must not appear in any extension");
            break;
          }
    }
    if (result.message.empty() && c.exact_facts) {
      for (const auto& fs : fact_sets)
        if (fs != *c.exact_facts) {
          fail("extension fact set differs from the exact expectation");
          break;
        }
    }
  }
  result.pass = result.message.empty();
  result.outcome = std::move(outcome);
  return result;
}

}  // namespace bdl
