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

#ifndef RELLAT_MODEL_SEARCH_HPP_
#define RELLAT_MODEL_SEARCH_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rellat/evaluate.hpp"
#include "rellat/finite_lattice.hpp"
#include "rellat/law.hpp"

namespace rellat {

/// Catalogue law ids, SLA always included. Built from names accepted by
/// expand_law_names (group aliases or ids).
class AxiomSet {
 public:
  AxiomSet() : AxiomSet(std::vector<std::string>{}) {}
  explicit AxiomSet(const std::vector<std::string>& names);

  const std::vector<std::string>& ids() const { return ids_; }
  bool contains(const std::string& id) const;

 private:
  std::vector<std::string> ids_;
};

using ModelAssignment = std::map<std::string, FiniteLattice::Element>;

/// Interprets terms in a finite lattice; variables and grounds are looked
/// up in the assignment.
class LatticeAlgebra {
 public:
  using Element = FiniteLattice::Element;

  LatticeAlgebra(const FiniteLattice& l, const ModelAssignment& env)
      : lattice_(l), env_(env) {}

  Element meet(Element a, Element b) const { return lattice_.meet(a, b); }
  Element join(Element a, Element b) const { return lattice_.join(a, b); }
  Element constant(Constant c) const;
  /// Throws UnboundName.
  Element lookup(const std::string& name) const;

 private:
  const FiniteLattice& lattice_;
  const ModelAssignment& env_;
};

struct ModelCounterexample {
  FiniteLattice lattice;
  std::string law;
  std::size_t clause = 0;
  ModelAssignment assignment;
};

/// First assignment (lexicographic over free names, in element order)
/// that falsifies `law` in `l`, or nullopt.
std::optional<ModelCounterexample> find_violation(const FiniteLattice& l,
                                                  const Law& law);

/// Checks each law of `laws` in order over all assignments; returns the
/// first violation.
std::optional<ModelCounterexample> check_model(const FiniteLattice& l,
                                               const AxiomSet& laws);

/// True iff `law` fails in `cx.lattice` under `cx.assignment`.
bool replays(const ModelCounterexample& cx);

struct SeparatingModel {
  FiniteLattice lattice;
  ModelCounterexample counterexample;
};

struct SearchStats {
  std::size_t lattices = 0;
  std::size_t designations = 0;
};

/// Smallest lattice (by size, then enumeration order up to isomorphism,
/// then designation (r00, r11) in lexicographic order) satisfying every law
/// of `assume` while falsifying `refute`. Throws InvalidInput unless
/// 1 <= max_size <= 7.
std::optional<SeparatingModel> find_separating_model(const AxiomSet& assume,
                                                     const std::string& refute,
                                                     std::size_t max_size,
                                                     SearchStats* stats = nullptr);

/// Human-readable model report: size and shape, cover relation,
/// designation, and the falsifying assignment.
std::string format_model(const SeparatingModel& m);

/// A derivation recorded in the catalogue: `goal` follows from
/// `assumptions`.
struct TheoremProblem {
  std::string goal;
  AxiomSet assumptions;
};

/// One problem per catalogue law with a recorded assumption list.
std::vector<TheoremProblem> theorem_problems();

}  // namespace rellat

#endif  // RELLAT_MODEL_SEARCH_HPP_
