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

#ifndef RELLAT_REWRITER_HPP_
#define RELLAT_REWRITER_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rellat/evaluate.hpp"
#include "rellat/law.hpp"
#include "rellat/term.hpp"

namespace rellat {

/// Schema constraints over ground names.
struct ConstraintSet {
  /// (E, D): every tuple of E matches some tuple of D on the shared
  /// attributes, i.e. antijoin(E, D) ∨ R00 = R00.
  std::vector<std::pair<std::string, std::string>> foreign_keys;
  /// (E0, E): E0 ranges over a subset of E's columns,
  /// i.e. (E ∧ E0) ∧ R00 = E ∧ R00.
  std::vector<std::pair<std::string, std::string>> projections;
  /// Additionally require every projection E0 to be a bare header
  /// (E0 ∧ R00 = E0). Off by default.
  bool projections_are_headers = false;

  bool empty() const { return foreign_keys.empty() && projections.empty(); }
};

/// {"foreign_keys": [["E","D"]], "projections": [["E0","E"]],
///  "projections_are_headers": false}; every key optional.
ConstraintSet constraints_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ConstraintSet& c);

/// Readable constraint names used in diagnostics: "FK(E,D)", "PROJ(E0,E)",
/// "HEADER(E0)".
std::vector<std::string> constraint_names(const ConstraintSet& c);

/// First constraint that `env` violates, as (name, detail); nullopt if all
/// hold. Constraints naming a relation absent from `env` are violations.
std::optional<std::pair<std::string, std::string>> find_violation(
    const ConstraintSet& c, const Assignment& env);

struct RewriteStep {
  Term before;
  Term after;
  std::string rule;
  /// The constraints the step relied on.
  ConstraintSet justification;
};

struct RewriteOptions {
  /// Universe for verification; defaults to the one `env` is bound to, or
  /// x∈{1,2}, y∈{a,b}, z∈{p,q} if `env` is unbound.
  std::optional<Universe> universe;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  /// Apply the last match in post-order first instead of the first.
  bool last_match_first = false;
};

struct RewriteResult {
  Term term;
  std::vector<RewriteStep> steps;
};

/// Rewrites every subterm E0 v (E ^ D), matched modulo associativity and
/// commutativity, to E0 v E where FK(E,D) and PROJ(E0,E) are declared, until
/// no match remains. Each step is checked with verify_rewrite before it is
/// accepted.
///
/// Throws ConstraintViolation if `env` breaks a declared constraint and
/// UnverifiedRewrite if a step fails verification.
RewriteResult eliminate_redundant_joins(const Term& t, const ConstraintSet& c,
                                        const Assignment& env,
                                        const RewriteOptions& options = {});

struct RewriteCounterexample {
  std::size_t trial = 0;
  Assignment assignment;
  Relation before;
  Relation after;
};

struct RewriteVerdict {
  std::size_t trials = 0;
  std::optional<RewriteCounterexample> counterexample;

  bool verified() const { return !counterexample.has_value(); }
};

/// Random instance over `names` satisfying `c` by construction: referenced
/// tables first, dangling tuples removed from every foreign-key source,
/// projection targets drawn over a subset of their source's header. The
/// content of a projection target cycles with `trial` through: exact
/// projection, projection plus noise, and arbitrary content.
/// Throws UnsatisfiableConstraints on cyclic dependencies.
Assignment sample_constrained(const ConstraintSet& c,
                              const std::set<std::string>& names,
                              const Universe& u, std::size_t trial, Rng& rng);

/// Checks eval(before) = eval(after) on `trials` constrained random
/// instances. Stops at the first difference.
RewriteVerdict verify_rewrite(const Term& before, const Term& after,
                              const ConstraintSet& c, const Universe& u,
                              std::size_t trials, std::uint64_t seed);

/// Every relation X over header(e) satisfying
///   (e ∧ d) ∨ X = e   and   (e ∧ d) ∧ X = (e ∧ d) ∧ R00,
/// by exhaustive enumeration of subsets of the full product over header(e).
/// Throws BoundExceeded if that product has more than `max_candidates`
/// tuples.
std::vector<Relation> solve_antijoin(const Relation& e, const Relation& d,
                                     const Universe& u,
                                     std::size_t max_candidates = 20);

}  // namespace rellat

#endif  // RELLAT_REWRITER_HPP_
