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

#ifndef RELLAT_FINITE_LATTICE_HPP_
#define RELLAT_FINITE_LATTICE_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rellat {

/// A lattice on elements 0..size-1 with two designated elements standing
/// for R00 and R11.
///
/// The order is stored as a bit matrix (bit i*size+j set iff i ≤ j); meet
/// and join are the greatest lower and least upper bounds of that order.
/// Read as an interpretation of terms, `^` is meet and `v` is join, so R01
/// (the identity of `^`) is the top and R10 (the identity of `v`) is the
/// bottom.
class FiniteLattice {
 public:
  static constexpr std::size_t kMaxSize = 7;
  using Element = std::uint8_t;

  /// Throws InvalidInput if `order` is not a lattice order on `size`
  /// elements or a designation is out of range.
  FiniteLattice(std::size_t size, std::uint64_t order, Element r00 = 0,
                Element r11 = 0);

  /// Builds from the cover relation (pairs lower, upper); the order is its
  /// reflexive-transitive closure.
  static FiniteLattice from_covers(
      std::size_t size, const std::vector<std::pair<Element, Element>>& covers);

  std::size_t size() const { return size_; }
  std::uint64_t order() const { return order_; }
  bool leq(Element a, Element b) const {
    return (order_ >> (a * size_ + b)) & 1U;
  }
  Element meet(Element a, Element b) const { return meet_[a * size_ + b]; }
  Element join(Element a, Element b) const { return join_[a * size_ + b]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  Element r00() const { return r00_; }
  Element r11() const { return r11_; }
  Element r01() const { return top_; }
  Element r10() const { return bottom_; }

  FiniteLattice with_designation(Element r00, Element r11) const;

  /// Covering pairs (lower, upper), sorted.
  std::vector<std::pair<Element, Element>> covers() const;

  /// Same order after renaming element i to perm[i]; designations follow.
  FiniteLattice relabeled(const std::vector<Element>& perm) const;

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.size_ == b.size_ && a.order_ == b.order_ && a.r00_ == b.r00_ &&
           a.r11_ == b.r11_;
  }

 private:
  std::size_t size_;
  std::uint64_t order_;
  std::array<Element, kMaxSize * kMaxSize> meet_{};
  std::array<Element, kMaxSize * kMaxSize> join_{};
  Element bottom_ = 0;
  Element top_ = 0;
  Element r00_ = 0;
  Element r11_ = 0;
};

/// Every lattice order on `size` labelled elements, each exactly once; or,
/// with `up_to_isomorphism`, one canonical representative per isomorphism
/// class. Designations are left at 0. Throws InvalidInput unless
/// 1 <= size <= 7.
const std::vector<FiniteLattice>& enumerate_lattices(std::size_t size,
                                                     bool up_to_isomorphism = false);

/// Smallest order code over all relabellings; equal iff isomorphic orders.
std::uint64_t canonical_order(const FiniteLattice& l);
bool isomorphic(const FiniteLattice& a, const FiniteLattice& b);

FiniteLattice chain_lattice(std::size_t size);
/// 0 < 1,2,3 < 4.
FiniteLattice diamond_m3();
/// 0 < 1 < 2 < 4 and 0 < 3 < 4.
FiniteLattice pentagon_n5();

/// "chain", "M3", "N5", "B2" (the four-element square) or "" if the shape
/// has no short name.
std::string shape_name(const FiniteLattice& l);

/// Cover relation as "a<b" pairs.
std::string describe_order(const FiniteLattice& l);

/// Hasse diagram, bottom drawn lowest, with R00/R11 marked.
std::string to_dot(const FiniteLattice& l);

}  // namespace rellat

#endif  // RELLAT_FINITE_LATTICE_HPP_
