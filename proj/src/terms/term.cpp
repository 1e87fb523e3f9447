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

#include <algorithm>
#include <sstream>

#include "rellat/error.hpp"
#include "rellat/evaluate.hpp"
#include "rellat/term.hpp"

namespace rellat {

std::string_view constant_name(Constant c) {
  switch (c) {
    case Constant::kR00: return "R00";
    case Constant::kR01: return "R01";
    case Constant::kR10: return "R10";
    case Constant::kR11: return "R11";
  }
  return "?";
}

Term Term::variable(std::string name) {
  return Term(std::make_shared<const Node>(
      Node{Kind::kVariable, std::move(name), Constant::kR00, {}}));
}

Term Term::ground(std::string name) {
  return Term(std::make_shared<const Node>(
      Node{Kind::kGround, std::move(name), Constant::kR00, {}}));
}

Term Term::constant(Constant c) {
  return Term(std::make_shared<const Node>(Node{Kind::kConstant, {}, c, {}}));
}

Term Term::meet(Term a, Term b) {
  return nary(Kind::kMeet, {std::move(a), std::move(b)});
}

Term Term::join(Term a, Term b) {
  return nary(Kind::kJoin, {std::move(a), std::move(b)});
}

Term Term::disjunction(Term a, Term b) {
  return Term(std::make_shared<const Node>(
      Node{Kind::kOr, {}, Constant::kR00, {std::move(a), std::move(b)}}));
}

Term Term::nary(Kind kind, std::vector<Term> args) {
  if (kind != Kind::kMeet && kind != Kind::kJoin) {
    throw Error("Term::nary only builds Meet and Join nodes");
  }
  if (args.size() < 2) throw Error("Term::nary needs at least two arguments");
  return Term(std::make_shared<const Node>(
      Node{kind, {}, Constant::kR00, std::move(args)}));
}

bool operator==(const Term& a, const Term& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Term::Kind::kVariable:
    case Term::Kind::kGround:
      return a.name() <=> b.name();
    case Term::Kind::kConstant:
      return a.constant_value() <=> b.constant_value();
    default:
      break;
  }
  auto xs = a.args();
  auto ys = b.args();
  return std::lexicographical_compare_three_way(xs.begin(), xs.end(),
                                                ys.begin(), ys.end());
}

namespace {

int precedence(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kJoin: return 1;
    case Term::Kind::kOr: return 2;
    case Term::Kind::kMeet: return 3;
    default: return 4;
  }
}

void print(std::ostream& os, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVariable:
    case Term::Kind::kGround:
      os << t.name();
      return;
    case Term::Kind::kConstant:
      os << constant_name(t.constant_value());
      return;
    default:
      break;
  }
  std::string_view op = t.kind() == Term::Kind::kMeet   ? " ^ "
                        : t.kind() == Term::Kind::kJoin ? " v "
                                                        : " + ";
  const int p = precedence(t);
  auto args = t.args();
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) os << op;
    const int q = precedence(args[i]);
    // Left-associative: only the leftmost operand may share precedence.
    const bool parens = q < p || (q == p && (i > 0 || args[i].args().size() > 2));
    if (parens) os << "(";
    print(os, args[i]);
    if (parens) os << ")";
  }
}

void collect(const Term& t, Term::Kind kind, std::set<std::string>& out) {
  if (t.kind() == kind) out.insert(t.name());
  for (const auto& a : t.args()) collect(a, kind, out);
}

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  print(os, t);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  print(os, t);
  return os;
}

std::string to_string(const Equation& e) {
  return to_string(e.lhs) + " = " + to_string(e.rhs);
}

std::string to_string(const Implication& i) {
  std::string out;
  for (std::size_t k = 0; k < i.premises.size(); ++k) {
    out += (k ? " & " : "") + to_string(i.premises[k]);
  }
  if (!i.premises.empty()) out += " -> ";
  return out + to_string(i.conclusion);
}

std::set<std::string> variables(const Term& t) {
  std::set<std::string> out;
  collect(t, Term::Kind::kVariable, out);
  return out;
}

std::set<std::string> grounds(const Term& t) {
  std::set<std::string> out;
  collect(t, Term::Kind::kGround, out);
  return out;
}

std::set<std::string> free_names(const Term& t) {
  auto out = variables(t);
  collect(t, Term::Kind::kGround, out);
  return out;
}

std::set<std::string> free_names(const std::vector<Implication>& clauses) {
  std::set<std::string> out;
  auto add = [&out](const Equation& e) {
    out.merge(free_names(e.lhs));
    out.merge(free_names(e.rhs));
  };
  for (const auto& c : clauses) {
    for (const auto& p : c.premises) add(p);
    add(c.conclusion);
  }
  return out;
}

Term rename(const Term& t, const std::map<std::string, std::string>& renaming) {
  switch (t.kind()) {
    case Term::Kind::kVariable:
    case Term::Kind::kGround: {
      auto it = renaming.find(t.name());
      if (it == renaming.end()) return t;
      return t.kind() == Term::Kind::kVariable ? Term::variable(it->second)
                                               : Term::ground(it->second);
    }
    case Term::Kind::kConstant:
      return t;
    case Term::Kind::kOr:
      return Term::disjunction(rename(t.args()[0], renaming),
                               rename(t.args()[1], renaming));
    default: {
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(rename(a, renaming));
      return Term::nary(t.kind(), std::move(args));
    }
  }
}

// Relation interpretation ------------------------------------------------

Relation RelationAlgebra::constant(Constant c) const {
  switch (c) {
    case Constant::kR00: return dum();
    case Constant::kR01: return dee();
    case Constant::kR10: return r10_;
    case Constant::kR11: return r11_;
  }
  return dum();
}

const Relation& RelationAlgebra::lookup(const std::string& name) const {
  auto it = env_.find(name);
  if (it == env_.end()) throw UnboundName(name);
  return it->second;
}

Relation eval(const Term& t, const Assignment& env, const Universe& u) {
  return evaluate(t, RelationAlgebra(env, u));
}

}  // namespace rellat
