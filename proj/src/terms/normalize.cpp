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

#include "rellat/term.hpp"

namespace rellat {

namespace {

void flatten_into(const Term& t, Term::Kind kind, std::vector<Term>& out) {
  if (t.kind() == kind) {
    for (const auto& a : t.args()) flatten_into(a, kind, out);
  } else {
    out.push_back(normalize_ac(t));
  }
}

}  // namespace

Term normalize_ac(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kMeet:
    case Term::Kind::kJoin: {
      std::vector<Term> args;
      for (const auto& a : t.args()) flatten_into(a, t.kind(), args);
      std::sort(args.begin(), args.end());
      return Term::nary(t.kind(), std::move(args));
    }
    case Term::Kind::kOr:
      return Term::disjunction(normalize_ac(t.args()[0]),
                               normalize_ac(t.args()[1]));
    default:
      return t;
  }
}

}  // namespace rellat
