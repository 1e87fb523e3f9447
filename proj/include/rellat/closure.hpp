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

#ifndef RELLAT_CLOSURE_HPP_
#define RELLAT_CLOSURE_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rellat/relation.hpp"

namespace rellat {

/// A finite set of relations closed under natural join and inner union.
struct Closure {
  /// Sorted by Relation's total order.
  std::vector<Relation> elements;
  std::vector<Relation> generators;
  Universe universe;
  /// Covering pairs (lower, upper) under le, as indices into `elements`.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;

  std::optional<std::size_t> index_of(const Relation& r) const;
};

struct ClosureOptions {
  /// Generation fails once the element set grows beyond this.
  std::size_t cap = 10000;
  /// Called after each fixpoint round with the current element count.
  std::function<void(std::size_t)> on_progress;
};

/// Fixpoint of pairwise ∧ and ∨ starting from `generators`. Throws
/// InvalidInput if `generators` is empty or not over `u`, and BoundExceeded
/// past the cap.
Closure generate_closure(const std::vector<Relation>& generators, const Universe& u,
                         const ClosureOptions& options = {});

/// Covering pairs of `elements` under le.
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(
    const std::vector<Relation>& elements);

/// DOT digraph of the Hasse diagram. Nodes are n0, n1, ... in element order,
/// labelled `{header}|tuple-count`; edges run from lower to upper. Identical
/// closures render byte-identically.
std::string export_dot(const Closure& c);

struct LatticeReport {
  /// Every pairwise ∧ and ∨ result is an element.
  bool closed = false;
  /// Commutativity, associativity and absorption over the checked triples.
  bool lattice_laws = false;
  /// Triples were sampled rather than exhausted (more than 50 elements).
  bool sampled = false;
  std::size_t triples_checked = 0;
  std::optional<std::size_t> least;
  std::optional<std::size_t> greatest;
  /// The le-least element is R01 and the le-greatest is R10.
  bool bounds_are_constants = false;
  std::vector<std::string> problems;

  bool ok() const { return closed && lattice_laws && bounds_are_constants; }
};

LatticeReport verify_lattice(const Closure& c);

/// Five elements {bottom, a, b, c, top} forming a pentagon sublattice, with
/// a < b and c incomparable to both; indices into `c.elements`.
std::optional<std::array<std::size_t, 5>> find_pentagon(const Closure& c);

}  // namespace rellat

#endif  // RELLAT_CLOSURE_HPP_
