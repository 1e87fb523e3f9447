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

#ifndef RELLAT_RELATION_JSON_HPP_
#define RELLAT_RELATION_JSON_HPP_

#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "rellat/relation.hpp"

namespace rellat {

// Relation literal:  {"header": ["deptno","ename"], "tuples": [["10","SMITH"]]}
// Tuple values are positional over the header as listed. Writers always emit
// the header sorted. Numeric values are accepted and read as their text.
//
// Universe file:     {"attributes": {"x": ["1","2"], "y": ["a","b"]}}

Relation relation_from_json(const nlohmann::json& j);
Relation relation_from_json(const nlohmann::json& j, const Universe& u);
nlohmann::json to_json(const Relation& r);

Universe universe_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Universe& u);

/// Named relations plus the universe they are bound to, if known.
struct Environment {
  std::optional<Universe> universe;
  std::map<std::string, Relation> relations;
};

/// Accepts either a flat object of name -> literal or
/// {"universe": {...}, "relations": {...}}. Relations are bound to
/// `override_universe` when given, else to the embedded universe.
Environment environment_from_json(const nlohmann::json& j,
                                  const Universe* override_universe = nullptr);

nlohmann::json read_json_file(const std::string& path);

}  // namespace rellat

#endif  // RELLAT_RELATION_JSON_HPP_
