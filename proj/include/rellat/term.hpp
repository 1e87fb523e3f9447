// Copyright 2026 The rellat Authors
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

#ifndef RELLAT_TERM_HPP_
#define RELLAT_TERM_HPP_

#include <compare>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rellat {

enum class Constant { kR00, kR01, kR10, kR11 };

std::string_view constant_name(Constant c);

/// Lattice expression.
///
/// Variables are universally quantified in laws; grounds name fixed
/// relations supplied by context (E, D, E0, ...). In concrete syntax an
/// identifier starting with a lower-case letter is a variable and one
/// starting with an upper-case letter is a ground.
///
/// Meet and Join nodes may be n-ary (arity >= 2) after normalize_ac();
/// Or nodes are always binary.
class Term {
 public:
  enum class Kind { kVariable, kGround, kConstant, kMeet, kJoin, kOr };

  static Term variable(std::string name);
  static Term ground(std::string name);
  static Term constant(Constant c);
  static Term meet(Term a, Term b);
  static Term join(Term a, Term b);
  static Term disjunction(Term a, Term b);
  /// Builds an n-ary Meet or Join; `args` must hold at least two terms.
  static Term nary(Kind kind, std::vector<Term> args);

  Kind kind() const { return node_->kind; }
  bool is_leaf() const { return node_->args.empty(); }
  /// Name of a variable or ground.
  const std::string& name() const { return node_->name; }
  Constant constant_value() const { return node_->constant; }
  std::span<const Term> args() const { return node_->args; }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    Constant constant = Constant::kR00;
    std::vector<Term> args;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// `^` meet, `v` join, `+` disjunction. Binary chains print without
/// redundant parentheses using the parser's precedences.
std::string to_string(const Term& t);
std::ostream& operator<<(std::ostream& os, const Term& t);

struct Equation {
  Term lhs;
  Term rhs;
};

/// premises -> conclusion. No premises means an unconditional identity.
struct Implication {
  std::vector<Equation> premises;
  Equation conclusion;
};

std::string to_string(const Equation& e);
std::string to_string(const Implication& i);

/// Parses a term. Grammar (loosest first, all binary operators left
/// associative):
///
///   join    := or ('v' or)*
///   or      := meet ('+' meet)*
///   meet    := primary ('^' primary)*
///   primary := 'R00' | 'R01' | 'R10' | 'R11' | identifier | '(' join ')'
///
/// The Unicode symbols ∧ and ∨ are accepted for `^` and `v`. Throws
/// ParseError.
Term parse_term(std::string_view text);

Equation parse_equation(std::string_view text);

/// Parses `eq & eq -> eq`, `eq <-> eq`, or a bare `eq`, with an optional
/// trailing '.'. A biconditional yields two implications, one per
/// direction.
std::vector<Implication> parse_statement(std::string_view text);

std::set<std::string> variables(const Term& t);
std::set<std::string> grounds(const Term& t);
/// Variables and grounds together.
std::set<std::string> free_names(const Term& t);
std::set<std::string> free_names(const std::vector<Implication>& clauses);

/// Replaces leaves whose name appears in `renaming`, keeping their kind.
Term rename(const Term& t, const std::map<std::string, std::string>& renaming);

/// Canonical form modulo associativity and commutativity of Meet and Join:
/// nested chains are flattened into one n-ary node and arguments sorted.
/// Or is normalised inside but not reordered.
Term normalize_ac(const Term& t);

}  // namespace rellat

#endif  // RELLAT_TERM_HPP_
