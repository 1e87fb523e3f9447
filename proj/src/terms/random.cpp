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

#include "rellat/law.hpp"

namespace rellat {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class BitSource {
 public:
  explicit BitSource(Rng& rng) : rng_(rng) {}

  bool next() {
    if (left_ == 0) {
      bits_ = rng_();
      left_ = 64;
    }
    bool b = bits_ & 1;
    bits_ >>= 1;
    --left_;
    return b;
  }

 private:
  Rng& rng_;
  std::uint64_t bits_ = 0;
  int left_ = 0;
};

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 1)));
}

Relation random_relation(const Universe& u, const Header& header, Rng& rng) {
  Header sorted = header;
  std::sort(sorted.begin(), sorted.end());
  BitSource bits(rng);
  std::vector<Row> rows;
  for (auto& row : u.product(sorted)) {
    if (bits.next()) rows.push_back(std::move(row));
  }
  // product() is lexicographic, so rows are already canonical.
  return Relation::from_canonical(std::move(sorted), std::move(rows), u);
}

Relation random_relation(const Universe& u, const Header& header,
                         std::uint64_t seed) {
  Rng rng(seed);
  return random_relation(u, header, rng);
}

Header random_header(const Universe& u, Rng& rng) {
  BitSource bits(rng);
  Header h;
  for (const auto& a : u.attributes()) {
    if (bits.next()) h.push_back(a);
  }
  return h;
}

Relation random_relation(const Universe& u, Rng& rng) {
  Header h = random_header(u, rng);
  return random_relation(u, h, rng);
}

Assignment random_assignment(const std::set<std::string>& names,
                             const Universe& u, HeaderMode mode, Rng& rng) {
  std::vector<Header> headers(names.size());
  switch (mode) {
    case HeaderMode::kIndependent:
      for (auto& h : headers) h = random_header(u, rng);
      break;
    case HeaderMode::kShared: {
      Header h = random_header(u, rng);
      std::fill(headers.begin(), headers.end(), h);
      break;
    }
    case HeaderMode::kSunflower: {
      // Each attribute goes to the core, to exactly one name, or nowhere.
      const std::size_t k = names.size();
      for (const auto& a : u.attributes()) {
        const std::size_t slot = std::uniform_int_distribution<std::size_t>(
            0, k + 1)(rng);
        if (slot == k) {
          for (auto& h : headers) h.push_back(a);
        } else if (slot < k) {
          headers[slot].push_back(a);
        }
      }
      break;
    }
  }
  Assignment env;
  std::size_t i = 0;
  for (const auto& name : names) {
    env.emplace(name, random_relation(u, headers[i++], rng));
  }
  return env;
}

}  // namespace rellat
