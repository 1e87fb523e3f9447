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

#include "rellat/relation_json.hpp"

#include <fstream>

#include "rellat/error.hpp"

namespace rellat {

using nlohmann::json;

namespace {

Value value_from_json(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number() || v.is_boolean()) return v.dump();
  throw InvalidInput("relation values must be strings or numbers, got " +
                     v.dump());
}

Relation parse_literal(const json& j) {
  if (!j.is_object() || !j.contains("header") || !j.contains("tuples")) {
    throw InvalidInput("relation literal needs \"header\" and \"tuples\"");
  }
  const json& jh = j.at("header");
  const json& jt = j.at("tuples");
  if (!jh.is_array() || !jt.is_array()) {
    throw InvalidInput("relation \"header\" and \"tuples\" must be arrays");
  }
  Header header;
  for (const auto& a : jh) {
    if (!a.is_string()) throw InvalidInput("attribute names must be strings");
    header.push_back(a.get<std::string>());
  }
  std::vector<Row> rows;
  for (const auto& t : jt) {
    if (!t.is_array()) throw InvalidInput("each tuple must be an array");
    Row row;
    for (const auto& v : t) row.push_back(value_from_json(v));
    rows.push_back(std::move(row));
  }
  return Relation(std::move(header), std::move(rows));
}

}  // namespace

Relation relation_from_json(const json& j) { return parse_literal(j); }

Relation relation_from_json(const json& j, const Universe& u) {
  return parse_literal(j).bound_to(u);
}

json to_json(const Relation& r) {
  json tuples = json::array();
  for (const auto& row : r.rows()) tuples.push_back(row);
  return json{{"header", r.header()}, {"tuples", std::move(tuples)}};
}

Universe universe_from_json(const json& j) {
  if (!j.is_object() || !j.contains("attributes") ||
      !j.at("attributes").is_object()) {
    throw InvalidInput("universe needs an \"attributes\" object");
  }
  Universe::Domains domains;
  for (const auto& [name, values] : j.at("attributes").items()) {
    if (!values.is_array()) {
      throw InvalidInput("domain of '" + name + "' must be an array");
    }
    auto& dom = domains[name];
    for (const auto& v : values) dom.push_back(value_from_json(v));
  }
  return Universe(std::move(domains));
}

json to_json(const Universe& u) {
  json attrs = json::object();
  for (const auto& [name, values] : u.domains()) attrs[name] = values;
  return json{{"attributes", std::move(attrs)}};
}

Environment environment_from_json(const json& j,
                                  const Universe* override_universe) {
  if (!j.is_object()) throw InvalidInput("environment must be a JSON object");
  Environment env;
  const json* relations = &j;
  if (j.contains("relations")) {
    relations = &j.at("relations");
    if (j.contains("universe")) env.universe = universe_from_json(j.at("universe"));
  }
  if (override_universe) env.universe = *override_universe;
  if (!relations->is_object()) {
    throw InvalidInput("\"relations\" must be a JSON object");
  }
  for (const auto& [name, literal] : relations->items()) {
    Relation r = parse_literal(literal);
    if (env.universe) r = r.bound_to(*env.universe);
    env.relations.emplace(name, std::move(r));
  }
  return env;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("'" + path + "': " + e.what());
  }
}

}  // namespace rellat
