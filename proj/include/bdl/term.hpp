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

#ifndef BDL_TERM_HPP
#define BDL_TERM_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bdl {

/// A term is either an interned constant (lowercase-initial name) or a
/// variable (uppercase-initial name). The two name spaces are disjoint.
struct Term {
  enum class Kind { Constant, Variable };

  Kind kind = Kind::Constant;
  std::string name;

  static Term constant(std::string n) { return Term{Kind::Constant, std::move(n)}; }
  static Term variable(std::string n) { return Term{Kind::Variable, std::move(n)}; }

  bool is_constant() const { return kind == Kind::Constant; }
  bool is_variable() const { return kind == Kind::Variable; }

  auto operator<=>(const Term&) const = default;
};

/// A possibly strongly-negated predicate applied to terms. Ground literals
/// are the atoms of the fact store and of every rule part.
struct Literal {
  std::string predicate;
  std::vector<Term> args;
  bool negated = false;

  bool is_ground() const {
    for (const Term& t : args)
      if (t.is_variable()) return false;
    return true;
  }

  Literal complement() const {
    Literal c = *this;
    c.negated = !c.negated;
    return c;
  }

  /// The positive atom underlying this literal.
  Literal atom() const {
    Literal a = *this;
    a.negated = false;
    return a;
  }

  std::string to_string() const {
    std::string s = negated ? "-" : "";
    s += predicate;
    s += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) s += ',';
      s += args[i].name;
    }
    s += ')';
    return s;
  }

  // Canonical order: predicate, arity, args, then positive before negative.
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.predicate <=> b.predicate; c != 0) return c;
    if (auto c = a.args.size() <=> b.args.size(); c != 0) return c;
    if (auto c = a.args <=> b.args; c != 0) return c;
    return a.negated <=> b.negated;
  }
  friend bool operator==(const Literal& a, const Literal& b) = default;
};

/// Flips the polarity of a literal; an involution on literals.
inline Literal complement(const Literal& l) { return l.complement(); }

/// Variable-to-constant binding produced by matching.
using Substitution = std::map<std::string, Term>;

inline Term substitute(const Substitution& s, const Term& t) {
  if (t.is_variable()) {
    auto it = s.find(t.name);
    if (it != s.end()) return it->second;
  }
  return t;
}

inline Literal substitute(const Substitution& s, const Literal& l) {
  Literal out = l;
  for (Term& t : out.args) t = substitute(s, t);
  return out;
}

/// Matches a pattern literal against a ground fact. Returns the unique
/// binding making them equal, or nullopt when predicate, polarity, arity,
/// or constants disagree.
inline std::optional<Substitution> match(const Literal& pattern, const Literal& fact) {
  if (pattern.predicate != fact.predicate || pattern.negated != fact.negated ||
      pattern.args.size() != fact.args.size())
    return std::nullopt;
  Substitution binding;
  for (std::size_t i = 0; i < pattern.args.size(); ++i) {
    const Term& p = pattern.args[i];
    const Term& f = fact.args[i];
    if (p.is_constant()) {
      if (p != f) return std::nullopt;
    } else {
      auto [it, inserted] = binding.emplace(p.name, f);
      if (!inserted && it->second != f) return std::nullopt;
    }
  }
  return binding;
}

/// Extends an existing binding by matching pattern against fact; fails on
/// conflicts with already-bound variables.
inline bool match_into(const Literal& pattern, const Literal& fact, Substitution& binding) {
  if (pattern.predicate != fact.predicate || pattern.negated != fact.negated ||
      pattern.args.size() != fact.args.size())
    return false;
  Substitution trial = binding;
  for (std::size_t i = 0; i < pattern.args.size(); ++i) {
    const Term& p = pattern.args[i];
    const Term& f = fact.args[i];
    if (p.is_constant()) {
      if (p != f) return false;
    } else {
      auto [it, inserted] = trial.emplace(p.name, f);
      if (!inserted && it->second != f) return false;
    }
  }
  binding = std::move(trial);
  return true;
}

}  // namespace bdl

#endif  // BDL_TERM_HPP
