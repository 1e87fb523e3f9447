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
#include <functional>
#include <span>

#include "rellat/error.hpp"
#include "rellat/rewriter.hpp"

namespace rellat {

namespace {

constexpr const char* kRule = "redundant-join";

void flatten(const Term& t, Term::Kind kind, std::vector<Term>& out) {
  if (t.kind() == kind) {
    for (const auto& a : t.args()) flatten(a, kind, out);
  } else {
    out.push_back(t);
  }
}

Term rebuild(Term::Kind kind, const std::vector<Term>& args) {
  Term acc = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) {
    acc = kind == Term::Kind::kMeet ? Term::meet(acc, args[i]) : Term::join(acc, args[i]);
  }
  return acc;
}

bool declared(const std::vector<std::pair<std::string, std::string>>& pairs,
              const std::string& a, const std::string& b) {
  return std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) != pairs.end();
}

struct Match {
  Term replacement;  // the rewritten join chain
  ConstraintSet justification;
};

// A join chain containing a ground E0 and a two-ground meet {E, D} with
// FK(E,D) and PROJ(E0,E) matches; the meet is replaced by E.
std::optional<Match> match_join(const Term& t, const ConstraintSet& c) {
  if (t.kind() != Term::Kind::kJoin) return std::nullopt;
  std::vector<Term> args;
  flatten(t, Term::Kind::kJoin, args);
  for (std::size_t m = 0; m < args.size(); ++m) {
    if (args[m].kind() != Term::Kind::kMeet) continue;
    std::vector<Term> factors;
    flatten(args[m], Term::Kind::kMeet, factors);
    if (factors.size() != 2 || factors[0].kind() != Term::Kind::kGround ||
        factors[1].kind() != Term::Kind::kGround) {
      continue;
    }
    for (int flip = 0; flip < 2; ++flip) {
      const std::string& e = factors[flip].name();
      const std::string& d = factors[1 - flip].name();
      if (!declared(c.foreign_keys, e, d)) continue;
      for (std::size_t k = 0; k < args.size(); ++k) {
        if (k == m || args[k].kind() != Term::Kind::kGround) continue;
        const std::string& e0 = args[k].name();
        if (!declared(c.projections, e0, e)) continue;
        std::vector<Term> replaced = args;
        replaced[m] = Term::ground(e);
        ConstraintSet why;
        why.foreign_keys = {{e, d}};
        why.projections = {{e0, e}};
        why.projections_are_headers = c.projections_are_headers;
        return Match{rebuild(Term::Kind::kJoin, replaced), std::move(why)};
      }
    }
  }
  return std::nullopt;
}

// Post-order positions of matching subterms; `path` lists argument indices.
void collect_matches(const Term& t, const ConstraintSet& c, std::vector<std::size_t>& path,
                     std::vector<std::vector<std::size_t>>& out) {
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    path.push_back(i);
    collect_matches(t.args()[i], c, path, out);
    path.pop_back();
  }
  if (match_join(t, c)) out.push_back(path);
}

Term replace_at(const Term& t, std::span<const std::size_t> path,
                const std::function<Term(const Term&)>& f) {
  if (path.empty()) return f(t);
  const auto args = t.args();
  std::vector<Term> next(args.begin(), args.end());
  next[path[0]] = replace_at(next[path[0]], path.subspan(1), f);
  if (t.kind() == Term::Kind::kOr) return Term::disjunction(next[0], next[1]);
  return Term::nary(t.kind(), std::move(next));
}

Universe default_universe() {
  return Universe({{"x", {"1", "2"}}, {"y", {"a", "b"}}, {"z", {"p", "q"}}});
}

}  // namespace

RewriteResult eliminate_redundant_joins(const Term& t, const ConstraintSet& c,
                                        const Assignment& env,
                                        const RewriteOptions& options) {
  for (const auto& g : grounds(t)) {
    if (!env.count(g)) throw UnboundName(g);
  }
  if (auto v = find_violation(c, env)) throw ConstraintViolation(v->first, v->second);

  Universe u = default_universe();
  if (options.universe) {
    u = *options.universe;
  } else {
    for (const auto& [_, r] : env) {
      if (r.universe()) {
        u = *r.universe();
        break;
      }
    }
  }

  RewriteResult result{t, {}};
  while (true) {
    std::vector<std::vector<std::size_t>> matches;
    std::vector<std::size_t> path;
    collect_matches(result.term, c, path, matches);
    if (matches.empty()) break;
    const auto& where = options.last_match_first ? matches.back() : matches.front();

    ConstraintSet why;
    Term after = replace_at(result.term, where, [&](const Term& sub) {
      auto m = match_join(sub, c);
      why = m->justification;
      return m->replacement;
    });

    RewriteVerdict verdict = verify_rewrite(result.term, after, why, u,
                                            options.trials, options.seed);
    if (!verdict.verified()) {
      throw UnverifiedRewrite("rewrite " + to_string(result.term) + "  =>  " +
                              to_string(after) + " failed verification at trial " +
                              std::to_string(verdict.counterexample->trial));
    }
    result.steps.push_back(RewriteStep{result.term, after, kRule, why});
    result.term = std::move(after);
  }
  return result;
}

RewriteVerdict verify_rewrite(const Term& before, const Term& after,
                              const ConstraintSet& c, const Universe& u,
                              std::size_t trials, std::uint64_t seed) {
  std::set<std::string> names = free_names(before);
  names.merge(free_names(after));
  RewriteVerdict verdict;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    Assignment env = sample_constrained(c, names, u, t, rng);
    Relation lhs = eval(before, env, u);
    Relation rhs = eval(after, env, u);
    ++verdict.trials;
    if (!(lhs == rhs)) {
      verdict.counterexample =
          RewriteCounterexample{t, std::move(env), std::move(lhs), std::move(rhs)};
      break;
    }
  }
  return verdict;
}

}  // namespace rellat
