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

#include "rellat/law.hpp"

namespace rellat {

namespace {

bool holds(const Equation& e, const RelationAlgebra& alg) {
  return evaluate(e.lhs, alg) == evaluate(e.rhs, alg);
}

bool has_premises(const Law& law) {
  for (const auto& c : law.clauses) {
    if (!c.premises.empty()) return true;
  }
  return false;
}

}  // namespace

std::optional<std::size_t> falsified_clause(const Law& law, const Assignment& env,
                                            const Universe& u,
                                            std::size_t* premises_met) {
  const RelationAlgebra alg(env, u);
  std::size_t met = 0;
  std::optional<std::size_t> failed;
  for (std::size_t i = 0; i < law.clauses.size() && !failed; ++i) {
    const auto& clause = law.clauses[i];
    bool premises = true;
    for (const auto& p : clause.premises) {
      if (!holds(p, alg)) {
        premises = false;
        break;
      }
    }
    if (!premises) continue;
    ++met;
    if (!holds(clause.conclusion, alg)) failed = i;
  }
  if (premises_met) *premises_met = met;
  return failed;
}

Verdict check_law(const Law& law, const Universe& u, std::size_t trials,
                  std::uint64_t seed) {
  static constexpr HeaderMode kModes[] = {
      HeaderMode::kIndependent, HeaderMode::kShared, HeaderMode::kSunflower};
  const auto names = free_names(law.clauses);
  const bool conditional = has_premises(law);

  Verdict verdict;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    Assignment env = random_assignment(names, u, kModes[t % 3], rng);
    std::size_t met = 0;
    auto failed = falsified_clause(law, env, u, &met);
    ++verdict.trials;
    if (conditional && met == 0) ++verdict.vacuous;
    if (failed) {
      const auto& conclusion = law.clauses[*failed].conclusion;
      LawCounterexample cx;
      cx.trial = t;
      cx.clause = *failed;
      cx.lhs = eval(conclusion.lhs, env, u);
      cx.rhs = eval(conclusion.rhs, env, u);
      cx.assignment = std::move(env);
      verdict.counterexample = std::move(cx);
      break;
    }
  }
  return verdict;
}

std::vector<Universe> desk_universes(std::size_t max_attributes,
                                     std::size_t max_values) {
  std::vector<Universe> out{Universe()};
  for (std::size_t n = 1; n <= max_attributes; ++n) {
    std::vector<AttributeName> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    // Non-decreasing domain sizes in [1, max_values].
    std::vector<std::size_t> sizes(n, 1);
    while (true) {
      Universe::Domains d;
      for (std::size_t i = 0; i < n; ++i) {
        auto& dom = d[names[i]];
        for (std::size_t v = 0; v < sizes[i]; ++v) dom.push_back(std::to_string(v));
      }
      out.emplace_back(std::move(d));
      std::size_t i = n;
      while (i > 0 && sizes[i - 1] == max_values) --i;
      if (i == 0) break;
      ++sizes[i - 1];
      for (std::size_t j = i; j < n; ++j) sizes[j] = sizes[i - 1];
    }
  }
  return out;
}

SweepResult sweep_law(const Law& law, const std::vector<Universe>& universes,
                      std::size_t trials, std::uint64_t seed) {
  SweepResult result;
  for (std::size_t i = 0; i < universes.size(); ++i) {
    Verdict v = check_law(law, universes[i], trials, seed);
    ++result.universes_checked;
    result.verdict.trials += v.trials;
    result.verdict.vacuous += v.vacuous;
    if (v.counterexample) {
      result.verdict.counterexample = std::move(v.counterexample);
      result.universe_index = i;
      break;
    }
  }
  return result;
}

}  // namespace rellat
