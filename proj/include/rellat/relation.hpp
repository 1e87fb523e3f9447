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

#ifndef RELLAT_RELATION_HPP_
#define RELLAT_RELATION_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rellat {

using AttributeName = std::string;
using Value = std::string;

/// Attribute names, kept sorted and duplicate-free.
using Header = std::vector<AttributeName>;

/// One tuple, positionally aligned with the owning relation's header.
using Row = std::vector<Value>;

/// Finite attribute set with a finite, nonempty value domain per attribute.
///
/// Copies share the underlying domain table. Two universes compare equal
/// when their domain tables are equal.
class Universe {
 public:
  using Domains = std::map<AttributeName, std::vector<Value>>;

  /// The degenerate universe with no attributes.
  Universe();

  /// Domains are deduplicated and sorted. Throws InvalidInput on an empty
  /// attribute name or an empty domain.
  explicit Universe(Domains domains);

  /// `attributes` names, each with values "0".."values-1".
  static Universe uniform(const std::vector<AttributeName>& attributes,
                          std::size_t values);

  const Domains& domains() const { return *domains_; }
  Header attributes() const;
  bool has_attribute(const AttributeName& name) const;
  const std::vector<Value>& domain(const AttributeName& name) const;
  bool is_degenerate() const { return domains_->empty(); }

  /// Number of tuples in the full product over `header`.
  std::size_t product_size(const Header& header) const;

  /// All rows of the full product over `header`, in lexicographic order.
  std::vector<Row> product(const Header& header) const;

  friend bool operator==(const Universe& a, const Universe& b);

 private:
  std::shared_ptr<const Domains> domains_;
};

std::ostream& operator<<(std::ostream& os, const Universe& u);

/// A header plus a set of tuples over exactly that header.
///
/// Relations are immutable values. A relation may be bound to a universe,
/// in which case every attribute and value was checked against it; the
/// binding only matters for mismatch detection and is ignored by equality.
class Relation {
 public:
  /// The empty relation with the empty header (R00).
  Relation() = default;

  /// `rows` are positional over `header` as given; both are canonicalised.
  /// Throws InvalidInput on duplicate or empty attribute names or on rows of
  /// the wrong arity.
  Relation(Header header, std::vector<Row> rows);
  Relation(Header header, std::vector<Row> rows, const Universe& universe);

  /// Builds from rows that are already positional over a sorted header,
  /// sorted, and duplicate-free. No validation.
  static Relation from_canonical(Header header, std::vector<Row> rows,
                                 std::optional<Universe> universe);

  const Header& header() const { return header_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  bool contains(const Row& row) const;

  /// nullptr when the relation is not bound to a universe.
  const Universe* universe() const {
    return universe_ ? &*universe_ : nullptr;
  }

  /// Returns a copy bound to `u`; throws InvalidInput if an attribute or
  /// value lies outside it.
  Relation bound_to(const Universe& u) const;

  /// The tuple at `index` as an attribute-to-value map.
  std::map<AttributeName, Value> tuple(std::size_t index) const;

  std::size_t hash() const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.header_ == b.header_ && a.rows_ == b.rows_;
  }
  /// Total order: header first, then rows.
  friend bool operator<(const Relation& a, const Relation& b) {
    if (a.header_ != b.header_) return a.header_ < b.header_;
    return a.rows_ < b.rows_;
  }

 private:
  Header header_;
  std::vector<Row> rows_;
  std::optional<Universe> universe_;
};

std::string to_string(const Relation& r);
std::ostream& operator<<(std::ostream& os, const Relation& r);

struct RelationHash {
  std::size_t operator()(const Relation& r) const { return r.hash(); }
};

// Constants.

/// R00: empty header, no tuples.
Relation dum();
/// R01: empty header, one empty tuple. Identity of natural_join.
Relation dee();
/// R10: full header, no tuples.
Relation top_empty(const Universe& u);
/// R11: full header, full cartesian product.
Relation universal(const Universe& u);

// Operations. Each throws UniverseMismatch if its operands are bound to
// different universes.

Relation natural_join(const Relation& a, const Relation& b);
Relation inner_union(const Relation& a, const Relation& b);

/// Restriction of `a` to `header ∩ header(a)`.
Relation project(const Relation& a, const Header& header);

/// Tuples of `e` agreeing with no tuple of `d` on the shared attributes.
Relation antijoin(const Relation& e, const Relation& d);

/// Tuples of `e` agreeing with some tuple of `d` on the shared attributes.
Relation semijoin(const Relation& e, const Relation& d);

/// Domain-completing disjunction, computed as
/// (a ∧ (b ∨ R11)) ∨ (b ∧ (a ∨ R11)).
Relation dd_or(const Relation& a, const Relation& b, const Universe& u);

/// The same disjunction computed directly: every tuple over
/// header(a) ∪ header(b) whose restriction lies in a, or in b.
Relation dd_or_set_builder(const Relation& a, const Relation& b,
                           const Universe& u);

/// Lattice order: a ≤ b iff a ∧ b = b. R01 is least and R10 greatest.
bool le(const Relation& a, const Relation& b);

/// Sorted union and intersection of headers.
Header header_union(const Header& a, const Header& b);
Header header_intersection(const Header& a, const Header& b);

}  // namespace rellat

#endif  // RELLAT_RELATION_HPP_
