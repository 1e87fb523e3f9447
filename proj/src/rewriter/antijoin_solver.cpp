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

#include "rellat/error.hpp"
#include "rellat/rewriter.hpp"

namespace rellat {

std::vector<Relation> solve_antijoin(const Relation& e, const Relation& d,
                                     const Universe& u,
                                     std::size_t max_candidates) {
  const std::vector<Row> candidates = u.product(e.header());
  if (candidates.size() > max_candidates) {
    throw BoundExceeded("anti-join search over " + std::to_string(candidates.size()) +
                        " candidate tuples (2^" + std::to_string(candidates.size()) +
                        " relations) exceeds the bound of " +
                        std::to_string(max_candidates));
  }
  const Relation ed = natural_join(e, d);
  const Relation ed_header = natural_join(ed, dum());

  std::vector<Relation> solutions;
  const std::uint64_t subsets = std::uint64_t{1} << candidates.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<Row> rows;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (mask >> i & 1U) rows.push_back(candidates[i]);
    }
    Relation x = Relation::from_canonical(e.header(), std::move(rows), u);
    if (inner_union(ed, x) == e && natural_join(ed, x) == ed_header) {
      solutions.push_back(std::move(x));
    }
  }
  return solutions;
}

}  // namespace rellat
