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

#ifndef RELLAT_TESTS_ORACLE_HPP_
#define RELLAT_TESTS_ORACLE_HPP_

// Brute-force reference implementations used only by tests. They work on
// tuples as attribute->value maps and enumerate the universe product instead
// of looping over operand rows, so they share no code path with the library
// operations they check.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "rellat/finite_lattice.hpp"
#include "rellat/relation.hpp"
#include "rellat/term.hpp"

namespace oracle {

using Tuple = std::map<std::string, std::string>;
using Attrs = std::set<std::string>;

struct Rel {
  Attrs header;
  std::set<Tuple> tuples;
  bool operator==(const Rel&) const = default;
};

inline Rel from(const rellat::Relation& r) {
  Rel out;
  out.header.insert(r.header().begin(), r.header().end());
  for (std::size_t i = 0; i < r.size(); ++i) out.tuples.insert(r.tuple(i));
  return out;
}

inline Tuple restrict(const Tuple& t, const Attrs& h) {
  Tuple out;
  for (const auto& a : h) out[a] = t.at(a);
  return out;
}

// Every tuple over `h` with values from `u`.
inline std::vector<Tuple> all_tuples(const rellat::Universe& u, const Attrs& h) {
  std::vector<Tuple> out{Tuple{}};
  for (const auto& a : h) {
    std::vector<Tuple> next;
    for (const auto& t : out) {
      for (const auto& v : u.domain(a)) {
        Tuple s = t;
        s[a] = v;
        next.push_back(std::move(s));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline Attrs unite(const Attrs& a, const Attrs& b) {
  Attrs out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline Attrs intersect(const Attrs& a, const Attrs& b) {
  Attrs out;
  for (const auto& x : a) {
    if (b.count(x)) out.insert(x);
  }
  return out;
}

// {t over H(a)∪H(b) | t|H(a) ∈ a and t|H(b) ∈ b}
inline Rel join(const Rel& a, const Rel& b, const rellat::Universe& u) {
  Rel out{unite(a.header, b.header), {}};
  for (const auto& t : all_tuples(u, out.header)) {
    if (a.tuples.count(restrict(t, a.header)) && b.tuples.count(restrict(t, b.header))) {
      out.tuples.insert(t);
    }
  }
  return out;
}

// {t over H(a)∩H(b) | some tuple of a or of b restricts to t}
inline Rel inner_union(const Rel& a, const Rel& b) {
  Rel out{intersect(a.header, b.header), {}};
  for (const auto& t : a.tuples) out.tuples.insert(restrict(t, out.header));
  for (const auto& t : b.tuples) out.tuples.insert(restrict(t, out.header));
  return out;
}

// {t ∈ e | no tuple of d agrees with t on H(e)∩H(d)}
inline Rel antijoin(const Rel& e, const Rel& d) {
  const Attrs shared = intersect(e.header, d.header);
  Rel out{e.header, {}};
  for (const auto& t : e.tuples) {
    bool matched = false;
    for (const auto& s : d.tuples) matched = matched || restrict(s, shared) == restrict(t, shared);
    if (!matched) out.tuples.insert(t);
  }
  return out;
}

// Disjunction: {t over H(a)∪H(b) | t|H(a) ∈ a or t|H(b) ∈ b}
inline Rel dd_or(const Rel& a, const Rel& b, const rellat::Universe& u) {
  Rel out{unite(a.header, b.header), {}};
  for (const auto& t : all_tuples(u, out.header)) {
    if (a.tuples.count(restrict(t, a.header)) || b.tuples.count(restrict(t, b.header))) {
      out.tuples.insert(t);
    }
  }
  return out;
}

// Lattice-term evaluator over explicit tables, written independently of the
// library's generic evaluator.
struct TableModel {
  const rellat::FiniteLattice* l;
  std::map<std::string, int> env;

  int eval(const rellat::Term& t) const {
    using K = rellat::Term::Kind;
    switch (t.kind()) {
      case K::kVariable:
      case K::kGround:
        return env.at(t.name());
      case K::kConstant:
        switch (t.constant_value()) {
          case rellat::Constant::kR00: return l->r00();
          case rellat::Constant::kR11: return l->r11();
          case rellat::Constant::kR01: return l->top();
          case rellat::Constant::kR10: return l->bottom();
        }
        break;
      case K::kMeet:
      case K::kJoin: {
        int acc = eval(t.args()[0]);
        for (std::size_t i = 1; i < t.args().size(); ++i) {
          const int b = eval(t.args()[i]);
          acc = t.kind() == K::kMeet ? meet(acc, b) : join(acc, b);
        }
        return acc;
      }
      case K::kOr: {
        const int x = eval(t.args()[0]);
        const int y = eval(t.args()[1]);
        const int r11 = l->r11();
        return join(meet(x, join(y, r11)), meet(y, join(x, r11)));
      }
    }
    return -1;
  }

  // glb/lub recomputed from the order bits rather than read from tables.
  int meet(int a, int b) const { return bound(a, b, true); }
  int join(int a, int b) const { return bound(a, b, false); }

  int bound(int a, int b, bool lower) const {
    const int n = static_cast<int>(l->size());
    int best = -1;
    for (int c = 0; c < n; ++c) {
      const bool ok = lower ? (leq(c, a) && leq(c, b)) : (leq(a, c) && leq(b, c));
      if (!ok) continue;
      if (best < 0 || (lower ? leq(best, c) : leq(c, best))) best = c;
    }
    return best;
  }

  bool leq(int a, int b) const {
    return (l->order() >> (a * static_cast<int>(l->size()) + b)) & 1U;
  }
};

// Commutativity, associativity and absorption re-checked from the tables.
inline bool tables_form_lattice(const rellat::FiniteLattice& l) {
  const std::size_t n = l.size();
  using E = rellat::FiniteLattice::Element;
  for (E a = 0; a < n; ++a) {
    for (E b = 0; b < n; ++b) {
      if (l.meet(a, b) != l.meet(b, a) || l.join(a, b) != l.join(b, a)) return false;
      if (l.meet(a, l.join(a, b)) != a || l.join(a, l.meet(a, b)) != a) return false;
      for (E c = 0; c < n; ++c) {
        if (l.meet(l.meet(a, b), c) != l.meet(a, l.meet(b, c))) return false;
        if (l.join(l.join(a, b), c) != l.join(a, l.join(b, c))) return false;
      }
    }
  }
  return true;
}

}  // namespace oracle

#endif  // RELLAT_TESTS_ORACLE_HPP_
