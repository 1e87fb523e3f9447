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

#ifndef RELLAT_EVALUATE_HPP_
#define RELLAT_EVALUATE_HPP_

#include <concepts>
#include <map>
#include <string>

#include "rellat/relation.hpp"
#include "rellat/term.hpp"

namespace rellat {

/// Anything terms can be interpreted in: two binary operations, the four
/// constants, and a lookup for variables and grounds.
template <typename A>
concept TermAlgebra = requires(const A& alg, const typename A::Element& e,
                               const std::string& name, Constant c) {
  { alg.meet(e, e) } -> std::convertible_to<typename A::Element>;
  { alg.join(e, e) } -> std::convertible_to<typename A::Element>;
  { alg.constant(c) } -> std::convertible_to<typename A::Element>;
  { alg.lookup(name) } -> std::convertible_to<typename A::Element>;
};

/// Structural evaluation. Disjunction is always expanded through its
/// lattice definition x + y = (x ∧ (y ∨ R11)) ∨ (y ∧ (x ∨ R11)).
template <TermAlgebra A>
typename A::Element evaluate(const Term& t, const A& alg) {
  using E = typename A::Element;
  switch (t.kind()) {
    case Term::Kind::kVariable:
    case Term::Kind::kGround:
      return alg.lookup(t.name());
    case Term::Kind::kConstant:
      return alg.constant(t.constant_value());
    case Term::Kind::kMeet:
    case Term::Kind::kJoin: {
      auto args = t.args();
      E acc = evaluate(args[0], alg);
      for (std::size_t i = 1; i < args.size(); ++i) {
        E next = evaluate(args[i], alg);
        acc = t.kind() == Term::Kind::kMeet ? alg.meet(acc, next)
                                            : alg.join(acc, next);
      }
      return acc;
    }
    case Term::Kind::kOr: {
      E x = evaluate(t.args()[0], alg);
      E y = evaluate(t.args()[1], alg);
      E r11 = alg.constant(Constant::kR11);
      return alg.join(alg.meet(x, alg.join(y, r11)),
                      alg.meet(y, alg.join(x, r11)));
    }
  }
  return alg.constant(Constant::kR00);
}

using Assignment = std::map<std::string, Relation>;

/// Relations under natural join and inner union.
class RelationAlgebra {
 public:
  using Element = Relation;

  RelationAlgebra(const Assignment& env, const Universe& u)
      : env_(env), universe_(u), r10_(top_empty(u)), r11_(universal(u)) {}

  Relation meet(const Relation& a, const Relation& b) const {
    return natural_join(a, b);
  }
  Relation join(const Relation& a, const Relation& b) const {
    return inner_union(a, b);
  }
  Relation constant(Constant c) const;
  /// Throws UnboundName.
  const Relation& lookup(const std::string& name) const;

 private:
  const Assignment& env_;
  Universe universe_;
  Relation r10_;
  Relation r11_;
};

/// Throws UnboundName if `env` misses a free name of `t`.
Relation eval(const Term& t, const Assignment& env, const Universe& u);

}  // namespace rellat

#endif  // RELLAT_EVALUATE_HPP_
