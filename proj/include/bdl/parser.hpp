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

#ifndef BDL_PARSER_HPP
#define BDL_PARSER_HPP

#include <optional>
#include <string>

#include "bdl/rule.hpp"

namespace bdl {

/// Location of a construct in the source text.
struct SourceSpan {
  int line = 1;
  int column = 1;
  std::size_t offset = 0;
  std::size_t length = 0;
};

struct ParseError {
  std::string message;  // names the expected construct
  SourceSpan span;
  std::string token;  // offending token text

  std::string format() const {
    return std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message +
           (token.empty() ? "" : " (got '" + token + "')");
  }
};

struct ParseResult {
  std::optional<DefaultTheory> theory;
  std::optional<ParseError> error;  // first error wins

  bool ok() const { return theory.has_value(); }
};

/// Parses the textual knowledge-base format (.bdl) into a theory.
/// Duplicate rule names, open-unsafe variables, and non-ground facts are
/// rejected here, so a returned theory always validates.
ParseResult parse_kb(const std::string& text);

/// Canonical text form; parse(pretty_print(parse(x))) == parse(x).
std::string pretty_print(const DefaultTheory& theory);

/// Parses a single ground literal such as "-flies(tweety)".
std::optional<Literal> parse_ground_literal(const std::string& text);

}  // namespace bdl

#endif  // BDL_PARSER_HPP
