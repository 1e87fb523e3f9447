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
#include <map>

#include "rellat/error.hpp"
#include "rellat/rewriter.hpp"

namespace rellat {

using nlohmann::json;

namespace {

std::vector<std::pair<std::string, std::string>> pairs_from_json(const json& j,
                                                                 const char* key) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!j.contains(key)) return out;
  const json& arr = j.at(key);
  if (!arr.is_array()) throw InvalidInput(std::string("\"") + key + "\" must be an array");
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw InvalidInput(std::string("each entry of \"") + key +
                         "\" must be a pair of names");
    }
    out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return out;
}

std::string fk_name(const std::string& e, const std::string& d) {
  return "FK(" + e + "," + d + ")";
}

std::string proj_name(const std::string& e0, const std::string& e) {
  return "PROJ(" + e0 + "," + e + ")";
}

const Relation* find(const Assignment& env, const std::string& name) {
  auto it = env.find(name);
  return it == env.end() ? nullptr : &it->second;
}

}  // namespace

ConstraintSet constraints_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("constraints must be a JSON object");
  ConstraintSet c;
  c.foreign_keys = pairs_from_json(j, "foreign_keys");
  c.projections = pairs_from_json(j, "projections");
  if (j.contains("projections_are_headers")) {
    c.projections_are_headers = j.at("projections_are_headers").get<bool>();
  }
  return c;
}

json to_json(const ConstraintSet& c) {
  json fks = json::array();
  for (const auto& [e, d] : c.foreign_keys) fks.push_back({e, d});
  json projs = json::array();
  for (const auto& [e0, e] : c.projections) projs.push_back({e0, e});
  return json{{"foreign_keys", fks},
              {"projections", projs},
              {"projections_are_headers", c.projections_are_headers}};
}

std::vector<std::string> constraint_names(const ConstraintSet& c) {
  std::vector<std::string> out;
  for (const auto& [e, d] : c.foreign_keys) out.push_back(fk_name(e, d));
  for (const auto& [e0, e] : c.projections) {
    out.push_back(proj_name(e0, e));
    if (c.projections_are_headers) out.push_back("HEADER(" + e0 + ")");
  }
  return out;
}

std::optional<std::pair<std::string, std::string>> find_violation(
    const ConstraintSet& c, const Assignment& env) {
  const Relation r00 = dum();
  for (const auto& [e, d] : c.foreign_keys) {
    const Relation* re = find(env, e);
    const Relation* rd = find(env, d);
    if (!re || !rd) {
      return std::make_pair(fk_name(e, d), std::string("relation not supplied"));
    }
    // antijoin(E,D) ∨ R00 = R00
    const Relation dangling = antijoin(*re, *rd);
    if (!(inner_union(dangling, r00) == r00)) {
      return std::make_pair(fk_name(e, d),
                            std::to_string(dangling.size()) +
                                " tuple(s) of " + e + " match nothing in " + d +
                                ": " + to_string(dangling));
    }
  }
  for (const auto& [e0, e] : c.projections) {
    const Relation* r0 = find(env, e0);
    const Relation* re = find(env, e);
    if (!r0 || !re) {
      return std::make_pair(proj_name(e0, e), std::string("relation not supplied"));
    }
    // (E ∧ E0) ∧ R00 = E ∧ R00
    if (!(natural_join(natural_join(*re, *r0), r00) == natural_join(*re, r00))) {
      return std::make_pair(proj_name(e0, e),
                            "header of " + e0 + " is not contained in header of " + e);
    }
    if (c.projections_are_headers && !(natural_join(*r0, r00) == *r0)) {
      return std::make_pair("HEADER(" + e0 + ")",
                            e0 + " has " + std::to_string(r0->size()) + " tuple(s)");
    }
  }
  return std::nullopt;
}

Assignment sample_constrained(const ConstraintSet& c,
                              const std::set<std::string>& names,
                              const Universe& u, std::size_t trial, Rng& rng) {
  // Dependencies: a foreign-key source needs its target, a projection needs
  // its source.
  std::map<std::string, std::set<std::string>> needs;
  for (const auto& n : names) needs[n];
  for (const auto& [e, d] : c.foreign_keys) {
    needs[e].insert(d);
    needs[d];
  }
  for (const auto& [e0, e] : c.projections) {
    needs[e0].insert(e);
    needs[e];
  }

  // Kahn's algorithm, ties broken by name.
  std::vector<std::string> order;
  std::map<std::string, std::set<std::string>> pending = needs;
  while (!pending.empty()) {
    auto ready = std::find_if(pending.begin(), pending.end(),
                              [](const auto& kv) { return kv.second.empty(); });
    if (ready == pending.end()) {
      throw UnsatisfiableConstraints(
          "constraint dependencies form a cycle through '" + pending.begin()->first +
          "'; instances cannot be built by construction");
    }
    const std::string name = ready->first;
    pending.erase(ready);
    for (auto& [_, deps] : pending) deps.erase(name);
    order.push_back(name);
  }

  Assignment env;
  for (const auto& name : order) {
    std::vector<const Relation*> sources;
    for (const auto& [e0, e] : c.projections) {
      if (e0 == name) sources.push_back(&env.at(e));
    }
    Relation r;
    if (sources.empty()) {
      r = random_relation(u, rng);
    } else {
      Header allowed = sources.front()->header();
      for (const Relation* s : sources) allowed = header_intersection(allowed, s->header());
      Header h;
      for (const auto& a : allowed) {
        if (rng() & 1U) h.push_back(a);
      }
      if (c.projections_are_headers) {
        r = Relation::from_canonical(h, {}, u);
      } else {
        switch (trial % 3) {
          case 0:
            r = project(*sources.front(), h);
            break;
          case 1:
            r = inner_union(project(*sources.front(), h), random_relation(u, h, rng));
            break;
          default:
            r = random_relation(u, h, rng);
            break;
        }
      }
    }
    for (const auto& [e, d] : c.foreign_keys) {
      if (e == name) r = semijoin(r, env.at(d));
    }
    env.insert_or_assign(name, std::move(r));
  }

  if (auto v = find_violation(c, env)) {
    throw UnsatisfiableConstraints("generated instance violates " + v->first +
                                   ": " + v->second);
  }
  return env;
}

}  // namespace rellat
