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
#include <cctype>
#include <set>

#include "rellat/error.hpp"
#include "rellat/law.hpp"

namespace rellat {

std::string_view status_name(LawStatus s) {
  switch (s) {
    case LawStatus::kValid: return "valid";
    case LawStatus::kInvalid: return "invalid";
    case LawStatus::kOpen: return "open";
  }
  return "?";
}

namespace {

Law make(std::string id, std::string text, LawStatus status, std::string source,
         std::vector<std::string> derived_from = {}) {
  Law law;
  law.id = std::move(id);
  law.clauses = parse_statement(text);
  law.text = std::move(text);
  law.status = status;
  law.source = std::move(source);
  law.derived_from = std::move(derived_from);
  return law;
}

// x ∈ {1,2}, y ∈ {a,b}: the two-attribute universe the worked examples use.
Universe example_universe() {
  return Universe({{"x", {"1", "2"}}, {"y", {"a", "b"}}});
}

Relation xy(std::vector<Row> rows) {
  return Relation({"x", "y"}, std::move(rows), example_universe());
}

std::vector<std::string> with_sla(std::vector<std::string> extra) {
  std::vector<std::string> out = sla_ids();
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

std::vector<Law> build_catalogue() {
  constexpr auto kValid = LawStatus::kValid;
  constexpr auto kInvalid = LawStatus::kInvalid;
  constexpr auto kOpen = LawStatus::kOpen;
  const std::string kLattice = "standard lattice axiom";

  // Assumption lists of the machine-checked derivations.
  const std::vector<std::string> cousin1_basis{
      "sla-meet-comm", "sla-absorb-1", "sla-join-comm", "fda", "fda-inv"};
  const std::vector<std::string> cousin2_basis{
      "sla-join-comm", "sla-meet-comm", "sla-join-assoc", "sla-absorb-2", "fda"};
  const std::vector<std::string> empty_dist_basis{
      "sdc", "sla-meet-comm", "sla-meet-assoc", "sla-absorb-1", "dch"};

  std::vector<Law> laws;
  laws.push_back(make("sla-meet-comm", "x ^ y = y ^ x", kValid, kLattice));
  laws.push_back(make("sla-meet-assoc", "(x ^ y) ^ z = x ^ (y ^ z)", kValid, kLattice));
  laws.push_back(make("sla-absorb-1", "x ^ (x v y) = x", kValid, kLattice));
  laws.push_back(make("sla-join-comm", "x v y = y v x", kValid, kLattice));
  laws.push_back(make("sla-join-assoc", "(x v y) v z = x v (y v z)", kValid, kLattice));
  laws.push_back(make("sla-absorb-2", "x v (x ^ y) = x", kValid, kLattice));

  laws.push_back(make("fda", "x = (x ^ R00) v (x ^ R11)", kValid,
                      "axiom: a relation is the union of its content and header"));
  laws.push_back(make("fda-inv", "R00 ^ (x v R11) = x ^ R00", kValid,
                      "axiom: the dual decomposition joined with R00"));
  laws.push_back(make("cousin-1", "R11 v (x ^ R00) = x v R11", kValid,
                      "theorem: companion identity of fda-inv", cousin1_basis));
  laws.push_back(make("cousin-2", "R00 v (x ^ R11) = x v R00", kValid,
                      "theorem: companion identity of fda-inv", cousin2_basis));
  laws.push_back(make("bottom-join", "R00 v R11 = R01", kValid,
                      "theorem: fda instantiated at R01", with_sla({"fda"})));
  laws.push_back(make("top-meet", "R00 ^ R11 = R10", kValid,
                      "theorem: fda-inv instantiated at R10",
                      with_sla({"fda", "fda-inv"})));
  laws.push_back(make("header-domain-equiv",
                      "R00 ^ x = R00 ^ y <-> R11 v x = R11 v y", kValid,
                      "theorem: header conditions restate as domain conditions",
                      cousin1_basis));
  laws.push_back(make("lh-meet-join", "(R00 ^ x) v (R00 ^ y) = R00 ^ (x v y)",
                      kValid, "theorem: x -> R00 ^ x preserves union",
                      with_sla({"fda", "fda-inv"})));
  laws.push_back(make("lh-meet-meet", "(R00 ^ x) ^ (R00 ^ y) = R00 ^ (x ^ y)",
                      kValid, "theorem: x -> R00 ^ x preserves join",
                      sla_ids()));
  laws.push_back(make("lh-join-meet", "(R11 v x) ^ (R11 v y) = R11 v (x ^ y)",
                      kValid, "theorem: x -> R11 v x preserves join",
                      with_sla({"fda", "fda-inv"})));
  laws.push_back(make("sdc",
                      "R00 ^ (x v y) = R00 ^ (x v z) -> "
                      "x ^ (y v z) = (x ^ y) v (x ^ z)",
                      kValid, "axiom: header criterion for join over union"));
  laws.push_back(make("sdc-domain-form",
                      "R11 v (x v y) = R11 v (x v z) -> "
                      "x ^ (y v z) = (x ^ y) v (x ^ z)",
                      kValid, "sdc with its premise stated over domains",
                      with_sla({"fda", "fda-inv", "sdc"})));
  laws.push_back(make("union-over-join-criterion",
                      "R00 ^ (x v y) = R00 ^ (x v z) & "
                      "R00 ^ (x v z) = R00 ^ (y v z) -> "
                      "x v (y ^ z) = (x v y) ^ (x v z)",
                      kValid, "theorem: header criterion for union over join",
                      with_sla({"sdc", "fda", "fda-inv"})));
  laws.push_back(make("dch", "R00 ^ (x ^ (y v z)) = R00 ^ ((x ^ y) v (x ^ z))",
                      kValid, "axiom: distributivity constraint on headers"));
  laws.push_back(make("dch-domain-form",
                      "R11 v (x ^ (y v z)) = R11 v ((x ^ y) v (x ^ z))", kValid,
                      "dch stated over domains",
                      with_sla({"fda", "fda-inv", "dch"})));
  laws.push_back(make("dch-dual",
                      "R00 ^ (x v (y ^ z)) = R00 ^ ((x v y) ^ (x v z))", kValid,
                      "theorem: dual of dch", with_sla({"sdc", "dch"})));
  laws.push_back(make("empty-dist-meet",
                      "(x ^ R00) ^ ((y ^ R00) v (z ^ R00)) = "
                      "((x ^ R00) ^ (y ^ R00)) v ((x ^ R00) ^ (z ^ R00))",
                      kValid, "theorem: empty relations distribute",
                      empty_dist_basis));
  laws.push_back(make("empty-dist-join",
                      "(x ^ R00) v ((y ^ R00) ^ (z ^ R00)) = "
                      "((x ^ R00) v (y ^ R00)) ^ ((x ^ R00) v (z ^ R00))",
                      kValid, "theorem: empty relations distribute",
                      empty_dist_basis));

  const std::vector<std::string> or_basis = with_sla(
      {"fda", "fda-inv", "sdc-domain-form", "dch-domain-form"});
  laws.push_back(make("or-assoc", "x + (y + z) = (x + y) + z", kValid,
                      "theorem: disjunction is associative", or_basis));
  laws.push_back(make("or-assoc-half",
                      "(x + y) + z = ((x ^ ((y ^ z) v R11)) v "
                      "(y ^ ((x ^ z) v R11))) v (z ^ ((x ^ y) v R11))",
                      kValid, "theorem: symmetric expansion of a disjunction chain",
                      or_basis));
  laws.push_back(make("meet-over-or", "x ^ (y + z) = (x ^ y) + (x ^ z)", kValid,
                      "theorem: join distributes over disjunction",
                      with_sla({"sdc-domain-form", "dch-domain-form",
                                "lh-join-meet"})));

  Law fda_dual = make("fda-dual", "x = (x v R00) ^ (x v R11)", kInvalid,
                      "dual of fda; fails on a three-tuple relation");
  fda_dual.witness =
      Witness{example_universe(), {{"x", xy({{"1", "a"}, {"1", "b"}, {"2", "a"}})}}};
  laws.push_back(std::move(fda_dual));

  Law r00_hom = make("r00-join-not-hom", "(R00 v x) ^ (R00 v y) = R00 v (x ^ y)",
                     kInvalid, "x -> R00 v x does not preserve join");
  r00_hom.witness = Witness{
      example_universe(),
      {{"x", Relation({"x"}, {{"1"}}, example_universe())},
       {"y", Relation({"x"}, {{"2"}}, example_universe())}}};
  laws.push_back(std::move(r00_hom));

  Law r11_hom = make("r11-meet-not-hom", "(R11 ^ x) v (R11 ^ y) = R11 ^ (x v y)",
                     kInvalid, "x -> R11 ^ x does not preserve union");
  r11_hom.witness = Witness{
      example_universe(),
      {{"x", Relation({"x"}, {{"1"}}, example_universe())},
       {"y", Relation({"y"}, {{"a"}}, example_universe())}}};
  laws.push_back(std::move(r11_hom));

  laws.push_back(make("or-over-meet", "x + (y ^ z) = (x + y) ^ (x + z)", kOpen,
                      "open: disjunction over join, neither proved nor refuted "
                      "from the axioms"));
  return laws;
}

}  // namespace

const std::vector<std::string>& sla_ids() {
  static const std::vector<std::string> ids{
      "sla-meet-comm", "sla-meet-assoc", "sla-absorb-1",
      "sla-join-comm", "sla-join-assoc", "sla-absorb-2"};
  return ids;
}

const std::vector<Law>& law_catalogue() {
  static const std::vector<Law> catalogue = build_catalogue();
  return catalogue;
}

const Law* lookup_law(std::string_view id) {
  for (const auto& law : law_catalogue()) {
    if (law.id == id) return &law;
  }
  return nullptr;
}

const Law& find_law(std::string_view id) {
  if (const Law* law = lookup_law(id)) return *law;
  throw UnknownLaw(std::string(id));
}

std::vector<std::string> expand_law_names(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  auto add = [&out](const std::string& id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  for (const auto& raw : names) {
    std::string upper;
    for (char c : raw) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (upper == "SLA") {
      for (const auto& id : sla_ids()) add(id);
    } else if (upper == "FDA") {
      add("fda");
    } else if (upper == "FDA-1" || upper == "FDA-INV" || raw == "FDA⁻¹") {
      add("fda-inv");
    } else if (upper == "SDC") {
      add("sdc");
    } else if (upper == "DCH") {
      add("dch");
    } else {
      add(find_law(raw).id);
    }
  }
  return out;
}

}  // namespace rellat
