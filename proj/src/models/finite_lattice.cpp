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

#include "rellat/finite_lattice.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "rellat/error.hpp"

namespace rellat {

namespace {

using Element = FiniteLattice::Element;

bool bit(std::uint64_t order, std::size_t n, std::size_t i, std::size_t j) {
  return (order >> (i * n + j)) & 1U;
}

std::uint64_t permute(std::uint64_t order, std::size_t n,
                      const std::vector<Element>& perm) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (bit(order, n, i, j)) out |= std::uint64_t{1} << (perm[i] * n + perm[j]);
    }
  }
  return out;
}

// Greatest element of `candidates` under `order` if one dominates all others
// (or least, when `greatest` is false); -1 otherwise.
int extremum(std::uint64_t order, std::size_t n, std::uint32_t candidates,
             bool greatest) {
  for (std::size_t g = 0; g < n; ++g) {
    if (!(candidates >> g & 1U)) continue;
    bool ok = true;
    for (std::size_t c = 0; c < n && ok; ++c) {
      if (!(candidates >> c & 1U)) continue;
      ok = greatest ? bit(order, n, c, g) : bit(order, n, g, c);
    }
    if (ok) return static_cast<int>(g);
  }
  return -1;
}

bool is_partial_order(std::uint64_t order, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!bit(order, n, i, i)) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && bit(order, n, i, j) && bit(order, n, j, i)) return false;
      if (!bit(order, n, i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (bit(order, n, j, k) && !bit(order, n, i, k)) return false;
      }
    }
  }
  return true;
}

// Bounds tables; false if some pair lacks a meet or a join.
bool fill_bounds(std::uint64_t order, std::size_t n, Element* meet, Element* join) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::uint32_t lower = 0;
      std::uint32_t upper = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (bit(order, n, c, a) && bit(order, n, c, b)) lower |= 1U << c;
        if (bit(order, n, a, c) && bit(order, n, b, c)) upper |= 1U << c;
      }
      const int m = extremum(order, n, lower, true);
      const int j = extremum(order, n, upper, false);
      if (m < 0 || j < 0) return false;
      meet[a * n + b] = static_cast<Element>(m);
      join[a * n + b] = static_cast<Element>(j);
    }
  }
  return true;
}

bool is_lattice_order(std::uint64_t order, std::size_t n) {
  std::array<Element, 49> m{};
  std::array<Element, 49> j{};
  return is_partial_order(order, n) && fill_bounds(order, n, m.data(), j.data());
}

void check_size(std::size_t n) {
  if (n < 1 || n > FiniteLattice::kMaxSize) {
    throw InvalidInput("lattice size must be between 1 and 7, got " +
                       std::to_string(n));
  }
}

// Orders with 0 as bottom, n-1 as top, and i ≤ j only when i ≤ j as
// integers. Every lattice of size >= 2 is isomorphic to at least one of these.
std::vector<std::uint64_t> naturally_labelled_lattices(std::size_t n) {
  if (n == 1) return {1};
  const std::size_t inner = n - 2;
  std::vector<std::uint64_t> out;
  // down[j]: bitmask of elements below or equal to j.
  std::vector<std::uint32_t> down(n, 0);
  down[0] = 1;
  down[n - 1] = (1U << n) - 1;

  auto emit = [&] {
    std::uint64_t order = 0;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (down[j] >> i & 1U) order |= std::uint64_t{1} << (i * n + j);
      }
    }
    if (is_lattice_order(order, n)) out.push_back(order);
  };

  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j > inner) {
      emit();
      return;
    }
    // Strictly-lower inner elements of j: a down-closed subset of 1..j-1.
    const std::uint32_t choices = j > 1 ? (1U << (j - 1)) : 1;
    for (std::uint32_t s = 0; s < choices; ++s) {
      std::uint32_t set = s << 1;  // elements 1..j-1
      bool closed = true;
      for (std::size_t i = 1; i < j && closed; ++i) {
        if (set >> i & 1U) closed = (down[i] & ~1U & ~set) == 0;
      }
      if (!closed) continue;
      down[j] = set | 1U | (1U << j);
      self(self, j + 1);
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<std::vector<Element>> all_permutations(std::size_t n) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<Element>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

const std::vector<std::vector<Element>>& permutations_of(std::size_t n) {
  static std::map<std::size_t, std::vector<std::vector<Element>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, all_permutations(n)).first;
  return it->second;
}

std::uint64_t canonical_code(std::uint64_t order, std::size_t n) {
  std::uint64_t best = ~std::uint64_t{0};
  for (const auto& p : permutations_of(n)) best = std::min(best, permute(order, n, p));
  return best;
}

std::vector<FiniteLattice> build_enumeration(std::size_t n, bool iso) {
  std::vector<FiniteLattice> out;
  std::unordered_set<std::uint64_t> seen_classes;
  for (std::uint64_t order : naturally_labelled_lattices(n)) {
    const std::uint64_t canon = canonical_code(order, n);
    if (!seen_classes.insert(canon).second) continue;
    if (iso) {
      out.emplace_back(n, canon);
      continue;
    }
    std::set<std::uint64_t> labelled;
    for (const auto& p : permutations_of(n)) labelled.insert(permute(order, n, p));
    for (std::uint64_t code : labelled) out.emplace_back(n, code);
  }
  return out;
}

}  // namespace

FiniteLattice::FiniteLattice(std::size_t size, std::uint64_t order, Element r00,
                             Element r11)
    : size_(size), order_(order), r00_(r00), r11_(r11) {
  check_size(size);
  if (r00 >= size || r11 >= size) {
    throw InvalidInput("designated element out of range");
  }
  if (size * size < 64 && (order >> (size * size)) != 0) {
    throw InvalidInput("order code has bits beyond the element range");
  }
  if (!is_partial_order(order, size)) throw InvalidInput("not a partial order");
  if (!fill_bounds(order, size, meet_.data(), join_.data())) {
    throw InvalidInput("partial order is not a lattice");
  }
  for (std::size_t i = 0; i < size; ++i) {
    bool is_bottom = true;
    bool is_top = true;
    for (std::size_t j = 0; j < size; ++j) {
      is_bottom = is_bottom && leq(static_cast<Element>(i), static_cast<Element>(j));
      is_top = is_top && leq(static_cast<Element>(j), static_cast<Element>(i));
    }
    if (is_bottom) bottom_ = static_cast<Element>(i);
    if (is_top) top_ = static_cast<Element>(i);
  }
}

FiniteLattice FiniteLattice::from_covers(
    std::size_t size, const std::vector<std::pair<Element, Element>>& covers) {
  check_size(size);
  std::uint64_t order = 0;
  for (std::size_t i = 0; i < size; ++i) order |= std::uint64_t{1} << (i * size + i);
  for (auto [a, b] : covers) order |= std::uint64_t{1} << (a * size + b);
  // Warshall closure.
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        if (bit(order, size, i, k) && bit(order, size, k, j)) {
          order |= std::uint64_t{1} << (i * size + j);
        }
      }
    }
  }
  return FiniteLattice(size, order);
}

FiniteLattice FiniteLattice::with_designation(Element r00, Element r11) const {
  if (r00 >= size_ || r11 >= size_) {
    throw InvalidInput("designated element out of range");
  }
  FiniteLattice copy = *this;
  copy.r00_ = r00;
  copy.r11_ = r11;
  return copy;
}

std::vector<std::pair<Element, Element>> FiniteLattice::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < size_; ++a) {
    for (Element b = 0; b < size_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool between = false;
      for (Element c = 0; c < size_ && !between; ++c) {
        between = c != a && c != b && leq(a, c) && leq(c, b);
      }
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

FiniteLattice FiniteLattice::relabeled(const std::vector<Element>& perm) const {
  if (perm.size() != size_) throw InvalidInput("permutation has the wrong size");
  return FiniteLattice(size_, permute(order_, size_, perm), perm[r00_], perm[r11_]);
}

const std::vector<FiniteLattice>& enumerate_lattices(std::size_t size,
                                                     bool up_to_isomorphism) {
  check_size(size);
  static std::map<std::pair<std::size_t, bool>, std::vector<FiniteLattice>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(size, up_to_isomorphism);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, build_enumeration(size, up_to_isomorphism)).first;
  }
  return it->second;
}

std::uint64_t canonical_order(const FiniteLattice& l) {
  return canonical_code(l.order(), l.size());
}

bool isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  return a.size() == b.size() && canonical_order(a) == canonical_order(b);
}

FiniteLattice chain_lattice(std::size_t size) {
  std::vector<std::pair<Element, Element>> covers;
  for (std::size_t i = 0; i + 1 < size; ++i) {
    covers.emplace_back(static_cast<Element>(i), static_cast<Element>(i + 1));
  }
  return FiniteLattice::from_covers(size, covers);
}

FiniteLattice diamond_m3() {
  return FiniteLattice::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

FiniteLattice pentagon_n5() {
  return FiniteLattice::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

std::string shape_name(const FiniteLattice& l) {
  if (isomorphic(l, chain_lattice(l.size()))) return "chain";
  if (l.size() == 5 && isomorphic(l, diamond_m3())) return "M3";
  if (l.size() == 5 && isomorphic(l, pentagon_n5())) return "N5";
  if (l.size() == 4 &&
      isomorphic(l, FiniteLattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}))) {
    return "B2";
  }
  return "";
}

std::string describe_order(const FiniteLattice& l) {
  std::ostringstream os;
  bool first = true;
  for (auto [a, b] : l.covers()) {
    os << (first ? "" : " ") << int{a} << "<" << int{b};
    first = false;
  }
  return os.str();
}

std::string to_dot(const FiniteLattice& l) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Element e = 0; e < l.size(); ++e) {
    std::string label = std::to_string(e);
    if (e == l.r00()) label += "\\nR00";
    if (e == l.r11()) label += "\\nR11";
    os << "  n" << int{e} << " [label=\"" << label << "\"];\n";
  }
  for (auto [a, b] : l.covers()) {
    os << "  n" << int{a} << " -> n" << int{b} << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace rellat
