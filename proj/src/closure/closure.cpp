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

#include "rellat/closure.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

#include "rellat/error.hpp"

namespace rellat {

std::optional<std::size_t> Closure::index_of(const Relation& r) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), r);
  if (it == elements.end() || !(*it == r)) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

Closure generate_closure(const std::vector<Relation>& generators, const Universe& u,
                         const ClosureOptions& options) {
  if (generators.empty()) throw InvalidInput("closure needs at least one generator");

  std::unordered_set<Relation, RelationHash> seen;
  std::vector<Relation> all;
  auto add = [&](Relation r) {
    if (seen.count(r)) return false;
    if (all.size() >= options.cap) {
      throw BoundExceeded("closure exceeds the cap of " + std::to_string(options.cap) +
                          " elements");
    }
    seen.insert(r);
    all.push_back(std::move(r));
    return true;
  };
  for (const auto& g : generators) add(g.bound_to(u));

  // Worklist over rounds: every new element is combined with everything seen
  // so far, including itself.
  std::size_t done = 0;
  while (done < all.size()) {
    const std::size_t frontier_end = all.size();
    for (std::size_t i = done; i < frontier_end; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        Relation m = natural_join(all[i], all[j]);
        Relation n = inner_union(all[i], all[j]);
        add(std::move(m));
        add(std::move(n));
      }
    }
    done = frontier_end;
    if (options.on_progress) options.on_progress(all.size());
  }

  Closure c;
  c.elements = std::move(all);
  std::sort(c.elements.begin(), c.elements.end());
  c.generators = generators;
  c.universe = u;
  c.hasse_edges = hasse_edges(c.elements);
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(
    const std::vector<Relation>& elements) {
  const std::size_t n = elements.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      below[a][b] = a != b && le(elements[a], elements[b]);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!below[a][b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c) {
        covered = !(below[a][c] && below[c][b]);
      }
      if (covered) out.emplace_back(a, b);
    }
  }
  return out;
}

std::string export_dot(const Closure& c) {
  std::ostringstream os;
  os << "digraph closure {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    const Relation& r = c.elements[i];
    os << "  n" << i << " [label=\"{";
    for (std::size_t k = 0; k < r.header().size(); ++k) {
      os << (k ? "," : "") << r.header()[k];
    }
    os << "}|" << r.size() << "\"];\n";
  }
  for (auto [a, b] : c.hasse_edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

LatticeReport verify_lattice(const Closure& c) {
  LatticeReport report;
  const auto& el = c.elements;
  const std::size_t n = el.size();
  std::unordered_set<Relation, RelationHash> members(el.begin(), el.end());

  report.closed = true;
  for (std::size_t a = 0; a < n && report.closed; ++a) {
    for (std::size_t b = a; b < n && report.closed; ++b) {
      for (const Relation& r : {natural_join(el[a], el[b]), inner_union(el[a], el[b])}) {
        if (!members.count(r)) {
          report.closed = false;
          report.problems.push_back("not closed: " + to_string(el[a]) + " and " +
                                    to_string(el[b]) + " give " + to_string(r));
          break;
        }
      }
    }
  }

  auto check_triple = [&](const Relation& x, const Relation& y, const Relation& z) {
    ++report.triples_checked;
    const bool ok =
        natural_join(x, y) == natural_join(y, x) && inner_union(x, y) == inner_union(y, x) &&
        natural_join(natural_join(x, y), z) == natural_join(x, natural_join(y, z)) &&
        inner_union(inner_union(x, y), z) == inner_union(x, inner_union(y, z)) &&
        natural_join(x, inner_union(x, y)) == x && inner_union(x, natural_join(x, y)) == x;
    if (!ok) {
      report.problems.push_back("lattice law fails on " + to_string(x) + ", " +
                                to_string(y) + ", " + to_string(z));
    }
    return ok;
  };

  report.lattice_laws = true;
  if (n <= 50) {
    for (std::size_t a = 0; a < n && report.lattice_laws; ++a) {
      for (std::size_t b = 0; b < n && report.lattice_laws; ++b) {
        for (std::size_t d = 0; d < n && report.lattice_laws; ++d) {
          report.lattice_laws = check_triple(el[a], el[b], el[d]);
        }
      }
    }
  } else {
    report.sampled = true;
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int k = 0; k < 20000 && report.lattice_laws; ++k) {
      report.lattice_laws = check_triple(el[pick(rng)], el[pick(rng)], el[pick(rng)]);
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    bool least = true;
    bool greatest = true;
    for (std::size_t b = 0; b < n && (least || greatest); ++b) {
      least = least && le(el[a], el[b]);
      greatest = greatest && le(el[b], el[a]);
    }
    if (least) report.least = a;
    if (greatest) report.greatest = a;
  }
  report.bounds_are_constants = report.least && report.greatest &&
                                el[*report.least] == dee() &&
                                el[*report.greatest] == top_empty(c.universe);
  if (!report.bounds_are_constants) {
    report.problems.push_back("least/greatest elements are not R01/R10");
  }
  return report;
}

std::optional<std::array<std::size_t, 5>> find_pentagon(const Closure& c) {
  // Under le, natural join is the least upper bound and inner union the
  // greatest lower bound.
  const auto& el = c.elements;
  const std::size_t n = el.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !le(el[a], el[b])) continue;
      for (std::size_t x = 0; x < n; ++x) {
        if (x == a || x == b) continue;
        const Relation top = natural_join(el[a], el[x]);
        const Relation bottom = inner_union(el[a], el[x]);
        if (!(natural_join(el[b], el[x]) == top) || !(inner_union(el[b], el[x]) == bottom)) {
          continue;
        }
        auto t = c.index_of(top);
        auto o = c.index_of(bottom);
        if (!t || !o) continue;
        // Distinct five elements: c incomparable to a and b follows from
        // top/bottom differing from all three.
        if (*t == a || *t == b || *t == x || *o == a || *o == b || *o == x) continue;
        return std::array<std::size_t, 5>{*o, a, b, x, *t};
      }
    }
  }
  return std::nullopt;
}

}  // namespace rellat
