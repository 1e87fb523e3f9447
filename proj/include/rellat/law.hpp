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

#ifndef RELLAT_LAW_HPP_
#define RELLAT_LAW_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rellat/evaluate.hpp"
#include "rellat/relation.hpp"
#include "rellat/term.hpp"

namespace rellat {

enum class LawStatus { kValid, kInvalid, kOpen };

std::string_view status_name(LawStatus s);

/// A concrete instance falsifying (or illustrating) a law.
struct Witness {
  Universe universe;
  Assignment assignment;
};

/// Catalogue entry.
struct Law {
  std::string id;
  /// Statement in `^`/`v`/`+` syntax, as parsed into `clauses`.
  std::string text;
  /// Conjunction of implications; a biconditional contributes two.
  std::vector<Implication> clauses;
  LawStatus status = LawStatus::kValid;
  /// Where the statement comes from, in words.
  std::string source;
  /// Law ids of the assumption list the law is derived from (empty for
  /// axioms and for laws without a recorded derivation).
  std::vector<std::string> derived_from;
  std::optional<Witness> witness;
};

/// The full catalogue, in a fixed order with unique ids.
const std::vector<Law>& law_catalogue();

/// Throws UnknownLaw.
const Law& find_law(std::string_view id);
const Law* lookup_law(std::string_view id);

/// Expands the group aliases SLA, FDA, FDA-1 (also FDA⁻¹), SDC and DCH
/// into catalogue ids; any other name must be a catalogue id. Throws
/// UnknownLaw.
std::vector<std::string> expand_law_names(const std::vector<std::string>& names);

/// Ids of the six standard lattice axioms.
const std::vector<std::string>& sla_ids();

// Random instances ------------------------------------------------------

using Rng = std::mt19937_64;

/// Per-trial engine derived from (seed, index); independent of how many
/// draws earlier trials made.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

/// Uniformly random subset of the full product over `header`.
Relation random_relation(const Universe& u, const Header& header, Rng& rng);
Relation random_relation(const Universe& u, const Header& header,
                         std::uint64_t seed);
/// Header drawn uniformly among the subsets of the universe's attributes.
Relation random_relation(const Universe& u, Rng& rng);
Header random_header(const Universe& u, Rng& rng);

enum class HeaderMode {
  /// Every name gets an independent uniformly random header.
  kIndependent,
  /// All names share one random header.
  kShared,
  /// Headers share a random core and own pairwise disjoint extras, so all
  /// pairwise header intersections coincide.
  kSunflower,
};

/// Random relations for `names`. Trials cycle through the header modes so
/// that header premises (equal headers, equal pairwise intersections) are
/// met by construction in a fixed share of trials.
Assignment random_assignment(const std::set<std::string>& names,
                             const Universe& u, HeaderMode mode, Rng& rng);

// Checking --------------------------------------------------------------

struct LawCounterexample {
  std::size_t trial = 0;
  /// Index into Law::clauses of the falsified clause.
  std::size_t clause = 0;
  Assignment assignment;
  Relation lhs;
  Relation rhs;
};

struct Verdict {
  std::size_t trials = 0;
  /// Trials whose premises did not hold in every clause.
  std::size_t vacuous = 0;
  std::optional<LawCounterexample> counterexample;

  bool holds() const { return !counterexample.has_value(); }
};

/// Evaluates every clause of `law` under `env`. Returns the index of the
/// first falsified clause, or nullopt if all hold. `premises_met` counts
/// clauses whose premises held.
std::optional<std::size_t> falsified_clause(const Law& law,
                                            const Assignment& env,
                                            const Universe& u,
                                            std::size_t* premises_met = nullptr);

/// Randomized check: `trials` seeded assignments; stops at the first
/// counterexample. Deterministic for fixed (law, universe, trials, seed).
Verdict check_law(const Law& law, const Universe& u, std::size_t trials,
                  std::uint64_t seed);

/// Universes with up to `max_attributes` attributes (named a, b, c, ...),
/// each with between 1 and `max_values` values; domain sizes are
/// non-decreasing in attribute order, so each shape appears once. Includes
/// the degenerate universe.
std::vector<Universe> desk_universes(std::size_t max_attributes,
                                     std::size_t max_values);

struct SweepResult {
  Verdict verdict;
  /// Index into the universe list of the counterexample, if any.
  std::optional<std::size_t> universe_index;
  std::size_t universes_checked = 0;
};

/// check_law over each universe in turn with the same seed, stopping at the
/// first universe that produces a counterexample.
SweepResult sweep_law(const Law& law, const std::vector<Universe>& universes,
                      std::size_t trials, std::uint64_t seed);

}  // namespace rellat

#endif  // RELLAT_LAW_HPP_
