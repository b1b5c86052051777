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

#include "bdl/parser.hpp"

#include <cctype>
#include <map>

namespace bdl {
namespace {

enum class Tok {
  Name,     // lowercase-initial identifier
  VarName,  // uppercase-initial identifier
  Number,
  Dot,
  Comma,
  Colon,
  ColonDash,
  Slash,
  Pipe,
  Minus,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Equals,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_trivia();
    Token t;
    t.span = here();
    if (pos_ >= text_.size()) {
      t.kind = Tok::End;
      return t;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        advance();
      t.text = text_.substr(start, pos_ - start);
      t.kind = std::isupper(static_cast<unsigned char>(t.text[0])) ? Tok::VarName : Tok::Name;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '.')) {
        // a '.' followed by a non-digit terminates the number (statement dot)
        if (text_[pos_] == '.' &&
            (pos_ + 1 >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))))
          break;
        advance();
      }
      t.text = text_.substr(start, pos_ - start);
      t.kind = Tok::Number;
    } else {
      switch (c) {
        case '.': t.kind = Tok::Dot; break;
        case ',': t.kind = Tok::Comma; break;
        case '/': t.kind = Tok::Slash; break;
        case '|': t.kind = Tok::Pipe; break;
        case '-': t.kind = Tok::Minus; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case '[': t.kind = Tok::LBracket; break;
        case ']': t.kind = Tok::RBracket; break;
        case '=': t.kind = Tok::Equals; break;
        case ':':
          if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
            advance();
            advance();
            t.kind = Tok::ColonDash;
            t.text = ":-";
            t.span.length = 2;
            return t;
          }
          t.kind = Tok::Colon;
          break;
        default: {
          t.kind = Tok::End;
          t.text = std::string(1, c);
          advance();
          t.span.length = 1;
          // surface as an error token via text; caller reports it
          t.kind = Tok::End;
          error_char_ = true;
          return t;
        }
      }
      t.text = std::string(1, c);
      advance();
    }
    t.span.length = pos_ - t.span.offset;
    return t;
  }

  bool saw_bad_char() const { return error_char_; }

 private:
  SourceSpan here() const { return SourceSpan{line_, col_, pos_, 0}; }

  void advance() {
    if (pos_ < text_.size()) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  bool error_char_ = false;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) { shift(); }

  ParseResult run() {
    DefaultTheory theory;
    int strict_counter = 0;
    while (cur_.kind != Tok::End && !failed_) {
      if (cur_.kind == Tok::Name && cur_.text == "default") {
        parse_default(theory);
      } else {
        parse_fact_or_rule(theory, strict_counter);
      }
    }
    if (!failed_ && lexer_.saw_bad_char()) fail("unexpected character");
    if (failed_) return ParseResult{std::nullopt, error_};
    theory.collect_constants();
    if (std::string v = validate_theory(theory); !v.empty()) {
      fail(v);
      return ParseResult{std::nullopt, error_};
    }
    return ParseResult{std::move(theory), std::nullopt};
  }

 private:
  void shift() { cur_ = lexer_.next(); }

  void fail(const std::string& message) {
    if (failed_) return;  // first error wins
    failed_ = true;
    error_ = ParseError{message, cur_.span, cur_.text};
  }

  bool expect(Tok kind, const std::string& what) {
    if (cur_.kind != kind) {
      fail("expected " + what);
      return false;
    }
    shift();
    return true;
  }

  std::optional<Literal> parse_literal() {
    Literal lit;
    if (cur_.kind == Tok::Minus) {
      lit.negated = true;
      shift();
    }
    if (cur_.kind != Tok::Name) {
      fail("expected a predicate name");
      return std::nullopt;
    }
    lit.predicate = cur_.text;
    shift();
    if (!expect(Tok::LParen, "'(' after predicate name")) return std::nullopt;
    while (true) {
      if (cur_.kind == Tok::Name) {
        lit.args.push_back(Term::constant(cur_.text));
      } else if (cur_.kind == Tok::VarName) {
        lit.args.push_back(Term::variable(cur_.text));
      } else {
        fail("expected a constant or variable term");
        return std::nullopt;
      }
      shift();
      if (cur_.kind == Tok::Comma) {
        shift();
        continue;
      }
      break;
    }
    if (!expect(Tok::RParen, "')' closing the argument list")) return std::nullopt;
    return lit;
  }

  std::vector<Literal> parse_literal_list() {
    std::vector<Literal> lits;
    while (true) {
      auto l = parse_literal();
      if (!l) return {};
      lits.push_back(*l);
      if (cur_.kind == Tok::Comma) {
        shift();
        continue;
      }
      break;
    }
    return lits;
  }

  // fact | disjunctive fact | strict rule, all terminated by '.'
  void parse_fact_or_rule(DefaultTheory& theory, int& strict_counter) {
    auto head = parse_literal();
    if (!head) return;
    if (cur_.kind == Tok::Dot) {
      shift();
      if (!head->is_ground()) {
        fail("fact " + head->to_string() + " is not ground");
        return;
      }
      theory.facts.insert(*head);
      return;
    }
    if (cur_.kind == Tok::Pipe) {
      DisjunctiveFact disj;
      disj.disjuncts.push_back(*head);
      while (cur_.kind == Tok::Pipe) {
        shift();
        auto l = parse_literal();
        if (!l) return;
        disj.disjuncts.push_back(*l);
      }
      if (!expect(Tok::Dot, "'.' terminating the disjunctive fact")) return;
      for (const Literal& l : disj.disjuncts)
        if (!l.is_ground()) {
          fail("disjunctive fact member " + l.to_string() + " is not ground");
          return;
        }
      disj.normalize();
      if (disj.disjuncts.size() == 1) {
        theory.facts.insert(disj.disjuncts[0]);  // single disjunct = plain fact
      } else {
        theory.disjunctive_facts.push_back(std::move(disj));
      }
      return;
    }
    if (cur_.kind == Tok::ColonDash) {
      shift();
      StrictRule rule;
      rule.head = *head;
      rule.body = parse_literal_list();
      if (failed_) return;
      if (!expect(Tok::Dot, "'.' terminating the rule")) return;
      rule.name = "r" + std::to_string(++strict_counter);
      theory.strict_rules.push_back(std::move(rule));
      return;
    }
    fail("expected '.', '|' or ':-' after literal");
  }

  // default NAME [order=N]? : prereq : justifs / concls .
  void parse_default(DefaultTheory& theory) {
    shift();  // 'default'
    if (cur_.kind != Tok::Name) {
      fail("expected a rule name after 'default'");
      return;
    }
    DefaultRule rule;
    rule.name = cur_.text;
    shift();
    if (cur_.kind == Tok::LBracket) {
      shift();
      if (cur_.kind != Tok::Name || cur_.text != "order") {
        fail("expected 'order' inside '[...]'");
        return;
      }
      shift();
      if (!expect(Tok::Equals, "'=' after 'order'")) return;
      if (cur_.kind != Tok::Number) {
        fail("expected a non-negative number for the order");
        return;
      }
      rule.order = Priority::parse_decimal(cur_.text);
      shift();
      if (!expect(Tok::RBracket, "']' closing the order annotation")) return;
    } else {
      rule.order = Priority::finite(0);  // omitted order = lowest finite priority
    }
    if (!expect(Tok::Colon, "':' before the prerequisite")) return;
    if (cur_.kind == Tok::Name && cur_.text == "true") {
      shift();  // empty prerequisite
    } else {
      rule.prerequisite = parse_literal_list();
      if (failed_) return;
    }
    if (!expect(Tok::Colon, "':' before the justifications")) return;
    rule.justifications = parse_literal_list();
    if (failed_) return;
    if (!expect(Tok::Slash, "'/' before the conclusions")) return;
    rule.conclusions = parse_literal_list();
    if (failed_) return;
    if (!expect(Tok::Dot, "'.' terminating the default")) return;
    theory.defaults.push_back(std::move(rule));
  }

  Lexer lexer_;
  Token cur_;
  bool failed_ = false;
  std::optional<ParseError> error_;
};

std::string join_literals(const std::vector<Literal>& lits, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i) s += sep;
    s += lits[i].to_string();
  }
  return s;
}

}  // namespace

ParseResult parse_kb(const std::string& text) { return Parser(text).run(); }

std::string pretty_print(const DefaultTheory& theory) {
  std::string out;
  for (const Literal& f : theory.facts) out += f.to_string() + ".\n";
  for (const DisjunctiveFact& d : theory.disjunctive_facts) {
    out += join_literals(d.disjuncts, " | ") + ".\n";
  }
  for (const StrictRule& r : theory.strict_rules)
    out += r.head.to_string() + " :- " + join_literals(r.body, ", ") + ".\n";
  for (const DefaultRule& d : theory.defaults) {
    out += "default " + d.name + " [order=" + d.order.to_decimal_string() + "]: ";
    out += d.prerequisite.empty() ? "true" : join_literals(d.prerequisite, ", ");
    out += " : " + join_literals(d.justifications, ", ");
    out += " / " + join_literals(d.conclusions, ", ") + ".\n";
  }
  return out;
}

std::optional<Literal> parse_ground_literal(const std::string& text) {
  ParseResult r = parse_kb(text + ".");
  if (!r.ok() || r.theory->facts.size() != 1) return std::nullopt;
  return *r.theory->facts.begin();
}

}  // namespace bdl
