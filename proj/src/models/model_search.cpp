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

#include "rellat/model_search.hpp"

#include <algorithm>
#include <sstream>

#include "rellat/error.hpp"

namespace rellat {

AxiomSet::AxiomSet(const std::vector<std::string>& names) {
  std::vector<std::string> all{"SLA"};
  all.insert(all.end(), names.begin(), names.end());
  ids_ = expand_law_names(all);
}

bool AxiomSet::contains(const std::string& id) const {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

FiniteLattice::Element LatticeAlgebra::constant(Constant c) const {
  switch (c) {
    case Constant::kR00: return lattice_.r00();
    case Constant::kR01: return lattice_.r01();
    case Constant::kR10: return lattice_.r10();
    case Constant::kR11: return lattice_.r11();
  }
  return lattice_.r00();
}

FiniteLattice::Element LatticeAlgebra::lookup(const std::string& name) const {
  auto it = env_.find(name);
  if (it == env_.end()) throw UnboundName(name);
  return it->second;
}

namespace {

bool equation_holds(const Equation& e, const LatticeAlgebra& alg) {
  return evaluate(e.lhs, alg) == evaluate(e.rhs, alg);
}

std::optional<std::size_t> failing_clause(const Law& law, const LatticeAlgebra& alg) {
  for (std::size_t i = 0; i < law.clauses.size(); ++i) {
    const auto& c = law.clauses[i];
    const bool premises = std::all_of(
        c.premises.begin(), c.premises.end(),
        [&](const Equation& p) { return equation_holds(p, alg); });
    if (premises && !equation_holds(c.conclusion, alg)) return i;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ModelCounterexample> find_violation(const FiniteLattice& l,
                                                  const Law& law) {
  const auto names_set = free_names(law.clauses);
  const std::vector<std::string> names(names_set.begin(), names_set.end());
  std::vector<FiniteLattice::Element> values(names.size(), 0);
  ModelAssignment env;
  for (const auto& n : names) env[n] = 0;
  const LatticeAlgebra alg(l, env);
  while (true) {
    for (std::size_t i = 0; i < names.size(); ++i) env[names[i]] = values[i];
    if (auto clause = failing_clause(law, alg)) {
      return ModelCounterexample{l, law.id, *clause, env};
    }
    // Odometer, last name fastest.
    std::size_t i = names.size();
    while (i > 0 && values[i - 1] + 1u == l.size()) values[--i] = 0;
    if (i == 0) return std::nullopt;
    ++values[i - 1];
  }
}

std::optional<ModelCounterexample> check_model(const FiniteLattice& l,
                                               const AxiomSet& laws) {
  for (const auto& id : laws.ids()) {
    if (auto cx = find_violation(l, find_law(id))) return cx;
  }
  return std::nullopt;
}

bool replays(const ModelCounterexample& cx) {
  const Law& law = find_law(cx.law);
  const LatticeAlgebra alg(cx.lattice, cx.assignment);
  return failing_clause(law, alg).has_value();
}

std::optional<SeparatingModel> find_separating_model(const AxiomSet& assume,
                                                     const std::string& refute,
                                                     std::size_t max_size,
                                                     SearchStats* stats) {
  if (max_size < 1 || max_size > FiniteLattice::kMaxSize) {
    throw InvalidInput("max size must be between 1 and 7");
  }
  const Law& target = find_law(refute);
  for (std::size_t n = 1; n <= max_size; ++n) {
    for (const auto& base : enumerate_lattices(n, true)) {
      if (stats) ++stats->lattices;
      for (std::size_t r00 = 0; r00 < n; ++r00) {
        for (std::size_t r11 = 0; r11 < n; ++r11) {
          if (stats) ++stats->designations;
          FiniteLattice l = base.with_designation(
              static_cast<FiniteLattice::Element>(r00),
              static_cast<FiniteLattice::Element>(r11));
          auto cx = find_violation(l, target);
          if (!cx) continue;
          if (check_model(l, assume)) continue;
          return SeparatingModel{l, std::move(*cx)};
        }
      }
    }
  }
  return std::nullopt;
}

std::string format_model(const SeparatingModel& m) {
  const auto& l = m.lattice;
  std::ostringstream os;
  const std::string shape = shape_name(l);
  os << "lattice: " << l.size() << " elements";
  if (!shape.empty()) os << " (" << shape << ")";
  os << "\norder: " << describe_order(l) << "\n";
  os << "designation: R00=" << int{l.r00()} << " R11=" << int{l.r11()}
     << " (R01=" << int{l.r01()} << " R10=" << int{l.r10()} << ")\n";
  os << "violates " << m.counterexample.law << " with";
  for (const auto& [name, value] : m.counterexample.assignment) {
    os << " " << name << "=" << int{value};
  }
  os << "\n";
  return os.str();
}

std::vector<TheoremProblem> theorem_problems() {
  std::vector<TheoremProblem> out;
  for (const auto& law : law_catalogue()) {
    if (law.status == LawStatus::kValid && !law.derived_from.empty()) {
      out.push_back({law.id, AxiomSet(law.derived_from)});
    }
  }
  return out;
}

}  // namespace rellat
