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

#include "rellat/relation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "rellat/error.hpp"

namespace rellat {

namespace {

void sort_unique(std::vector<Row>& rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

std::optional<Universe> merge_universes(const Relation& a, const Relation& b) {
  const Universe* ua = a.universe();
  const Universe* ub = b.universe();
  if (ua && ub) {
    if (!(*ua == *ub)) {
      throw UniverseMismatch("operands are bound to different universes: " +
                             to_string(a) + " and " + to_string(b));
    }
    return *ua;
  }
  if (ua) return *ua;
  if (ub) return *ub;
  return std::nullopt;
}

// Positions of `sub` attributes inside `header`; every element of `sub` must
// occur in `header`.
std::vector<std::size_t> positions(const Header& header, const Header& sub) {
  std::vector<std::size_t> out;
  out.reserve(sub.size());
  for (const auto& name : sub) {
    auto it = std::lower_bound(header.begin(), header.end(), name);
    out.push_back(static_cast<std::size_t>(it - header.begin()));
  }
  return out;
}

Row pick(const Row& row, const std::vector<std::size_t>& at) {
  Row out;
  out.reserve(at.size());
  for (auto i : at) out.push_back(row[i]);
  return out;
}

void check_header(const Header& header) {
  for (const auto& name : header) {
    if (name.empty()) throw InvalidInput("empty attribute name");
  }
  Header sorted = header;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("duplicate attribute in header");
  }
}

void check_against(const Relation& r, const Universe& u) {
  for (std::size_t i = 0; i < r.header().size(); ++i) {
    const auto& attr = r.header()[i];
    if (!u.has_attribute(attr)) {
      throw InvalidInput("attribute '" + attr + "' is not in the universe");
    }
    const auto& dom = u.domain(attr);
    for (const auto& row : r.rows()) {
      if (!std::binary_search(dom.begin(), dom.end(), row[i])) {
        throw InvalidInput("value '" + row[i] + "' is outside the domain of '" +
                           attr + "'");
      }
    }
  }
}

}  // namespace

// Universe --------------------------------------------------------------

Universe::Universe() : domains_(std::make_shared<const Domains>()) {}

Universe::Universe(Domains domains) {
  for (auto& [name, values] : domains) {
    if (name.empty()) throw InvalidInput("empty attribute name in universe");
    if (values.empty()) {
      throw InvalidInput("attribute '" + name + "' has an empty domain");
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
  }
  domains_ = std::make_shared<const Domains>(std::move(domains));
}

Universe Universe::uniform(const std::vector<AttributeName>& attributes,
                           std::size_t values) {
  Domains d;
  for (const auto& a : attributes) {
    auto& dom = d[a];
    for (std::size_t v = 0; v < values; ++v) dom.push_back(std::to_string(v));
  }
  return Universe(std::move(d));
}

Header Universe::attributes() const {
  Header out;
  out.reserve(domains_->size());
  for (const auto& [name, _] : *domains_) out.push_back(name);
  return out;
}

bool Universe::has_attribute(const AttributeName& name) const {
  return domains_->count(name) != 0;
}

const std::vector<Value>& Universe::domain(const AttributeName& name) const {
  auto it = domains_->find(name);
  if (it == domains_->end()) {
    throw InvalidInput("attribute '" + name + "' is not in the universe");
  }
  return it->second;
}

std::size_t Universe::product_size(const Header& header) const {
  std::size_t n = 1;
  for (const auto& a : header) n *= domain(a).size();
  return n;
}

std::vector<Row> Universe::product(const Header& header) const {
  std::vector<Row> out{Row{}};
  for (const auto& a : header) {
    const auto& dom = domain(a);
    std::vector<Row> next;
    next.reserve(out.size() * dom.size());
    for (const auto& prefix : out) {
      for (const auto& v : dom) {
        Row r = prefix;
        r.push_back(v);
        next.push_back(std::move(r));
      }
    }
    out = std::move(next);
  }
  return out;
}

bool operator==(const Universe& a, const Universe& b) {
  return a.domains_ == b.domains_ || *a.domains_ == *b.domains_;
}

std::ostream& operator<<(std::ostream& os, const Universe& u) {
  os << "{";
  bool first = true;
  for (const auto& [name, values] : u.domains()) {
    if (!first) os << ", ";
    first = false;
    os << name << "∈{";
    for (std::size_t i = 0; i < values.size(); ++i) {
      os << (i ? "," : "") << values[i];
    }
    os << "}";
  }
  return os << "}";
}

// Relation --------------------------------------------------------------

Relation::Relation(Header header, std::vector<Row> rows) {
  check_header(header);
  for (const auto& row : rows) {
    if (row.size() != header.size()) {
      throw InvalidInput("tuple arity does not match header");
    }
  }
  std::vector<std::size_t> order(header.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return header[i] < header[j]; });
  header_.reserve(header.size());
  for (auto i : order) header_.push_back(std::move(header[i]));
  rows_.reserve(rows.size());
  for (auto& row : rows) rows_.push_back(pick(row, order));
  sort_unique(rows_);
}

Relation::Relation(Header header, std::vector<Row> rows,
                   const Universe& universe)
    : Relation(std::move(header), std::move(rows)) {
  check_against(*this, universe);
  universe_ = universe;
}

Relation Relation::from_canonical(Header header, std::vector<Row> rows,
                                  std::optional<Universe> universe) {
  Relation r;
  r.header_ = std::move(header);
  r.rows_ = std::move(rows);
  r.universe_ = std::move(universe);
  return r;
}

bool Relation::contains(const Row& row) const {
  return std::binary_search(rows_.begin(), rows_.end(), row);
}

Relation Relation::bound_to(const Universe& u) const {
  check_against(*this, u);
  Relation r = *this;
  r.universe_ = u;
  return r;
}

std::map<AttributeName, Value> Relation::tuple(std::size_t index) const {
  std::map<AttributeName, Value> out;
  const Row& row = rows_.at(index);
  for (std::size_t i = 0; i < header_.size(); ++i) out[header_[i]] = row[i];
  return out;
}

std::size_t Relation::hash() const {
  std::hash<std::string> h;
  std::size_t seed = header_.size() * 0x9e3779b97f4a7c15ULL;
  auto mix = [&seed](std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  };
  for (const auto& a : header_) mix(h(a));
  mix(rows_.size());
  for (const auto& row : rows_) {
    for (const auto& v : row) mix(h(v));
  }
  return seed;
}

std::string to_string(const Relation& r) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < r.header().size(); ++i) {
    os << (i ? "," : "") << r.header()[i];
  }
  os << "}[";
  for (std::size_t i = 0; i < r.rows().size(); ++i) {
    os << (i ? "," : "") << "(";
    const auto& row = r.rows()[i];
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
    os << ")";
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Relation& r) {
  return os << to_string(r);
}

// Constants --------------------------------------------------------------

Relation dum() { return Relation(); }

Relation dee() { return Relation::from_canonical({}, {Row{}}, std::nullopt); }

Relation top_empty(const Universe& u) {
  return Relation::from_canonical(u.attributes(), {}, u);
}

Relation universal(const Universe& u) {
  Header h = u.attributes();
  auto rows = u.product(h);
  return Relation::from_canonical(std::move(h), std::move(rows), u);
}

// Operations ------------------------------------------------------------

Header header_union(const Header& a, const Header& b) {
  Header out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

Header header_intersection(const Header& a, const Header& b) {
  Header out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

Relation natural_join(const Relation& a, const Relation& b) {
  auto u = merge_universes(a, b);
  Header header = header_union(a.header(), b.header());
  Header shared = header_intersection(a.header(), b.header());
  auto shared_a = positions(a.header(), shared);
  auto shared_b = positions(b.header(), shared);

  // For each output column: (from_a, index in source).
  std::vector<std::pair<bool, std::size_t>> source;
  source.reserve(header.size());
  for (const auto& name : header) {
    auto ia = std::lower_bound(a.header().begin(), a.header().end(), name);
    if (ia != a.header().end() && *ia == name) {
      source.emplace_back(true, ia - a.header().begin());
    } else {
      auto ib = std::lower_bound(b.header().begin(), b.header().end(), name);
      source.emplace_back(false, ib - b.header().begin());
    }
  }

  std::vector<Row> rows;
  for (const auto& ra : a.rows()) {
    for (const auto& rb : b.rows()) {
      bool agree = true;
      for (std::size_t k = 0; k < shared.size() && agree; ++k) {
        agree = ra[shared_a[k]] == rb[shared_b[k]];
      }
      if (!agree) continue;
      Row out;
      out.reserve(header.size());
      for (const auto& [from_a, i] : source) out.push_back(from_a ? ra[i] : rb[i]);
      rows.push_back(std::move(out));
    }
  }
  sort_unique(rows);
  return Relation::from_canonical(std::move(header), std::move(rows),
                                  std::move(u));
}

Relation project(const Relation& a, const Header& header) {
  Header sorted = header;
  std::sort(sorted.begin(), sorted.end());
  Header effective = header_intersection(a.header(), sorted);
  if (effective == a.header()) return a;
  auto at = positions(a.header(), effective);
  std::vector<Row> rows;
  rows.reserve(a.size());
  for (const auto& row : a.rows()) rows.push_back(pick(row, at));
  sort_unique(rows);
  std::optional<Universe> u;
  if (a.universe()) u = *a.universe();
  return Relation::from_canonical(std::move(effective), std::move(rows),
                                  std::move(u));
}

Relation inner_union(const Relation& a, const Relation& b) {
  auto u = merge_universes(a, b);
  Header header = header_intersection(a.header(), b.header());
  auto at_a = positions(a.header(), header);
  auto at_b = positions(b.header(), header);
  std::vector<Row> rows;
  rows.reserve(a.size() + b.size());
  for (const auto& row : a.rows()) rows.push_back(pick(row, at_a));
  for (const auto& row : b.rows()) rows.push_back(pick(row, at_b));
  sort_unique(rows);
  return Relation::from_canonical(std::move(header), std::move(rows),
                                  std::move(u));
}

namespace {

Relation filter_by_match(const Relation& e, const Relation& d, bool keep_matching) {
  auto u = merge_universes(e, d);
  Header shared = header_intersection(e.header(), d.header());
  Relation keys = project(d, shared);
  auto at = positions(e.header(), shared);
  std::vector<Row> rows;
  for (const auto& row : e.rows()) {
    if (keys.contains(pick(row, at)) == keep_matching) rows.push_back(row);
  }
  return Relation::from_canonical(e.header(), std::move(rows), std::move(u));
}

}  // namespace

Relation antijoin(const Relation& e, const Relation& d) {
  return filter_by_match(e, d, false);
}

Relation semijoin(const Relation& e, const Relation& d) {
  return filter_by_match(e, d, true);
}

Relation dd_or(const Relation& a, const Relation& b, const Universe& u) {
  const Relation r11 = universal(u);
  return inner_union(natural_join(a, inner_union(b, r11)),
                     natural_join(b, inner_union(a, r11)));
}

Relation dd_or_set_builder(const Relation& a, const Relation& b,
                           const Universe& u) {
  auto bound = merge_universes(a, b);
  if (bound && !(*bound == u)) {
    throw UniverseMismatch("disjunction operands and universe differ");
  }
  Header header = header_union(a.header(), b.header());
  auto at_a = positions(header, a.header());
  auto at_b = positions(header, b.header());
  std::vector<Row> rows;
  for (auto& row : u.product(header)) {
    if (a.contains(pick(row, at_a)) || b.contains(pick(row, at_b))) {
      rows.push_back(std::move(row));
    }
  }
  return Relation::from_canonical(std::move(header), std::move(rows), u);
}

bool le(const Relation& a, const Relation& b) { return natural_join(a, b) == b; }

}  // namespace rellat
