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

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rellat/law.hpp"
#include "rellat/model_search.hpp"

namespace rellat {
namespace {

using E = FiniteLattice::Element;

// Replays a counterexample with the test-side evaluator.
bool replays_independently(const ModelCounterexample& cx) {
  const Law& law = find_law(cx.law);
  oracle::TableModel m{&cx.lattice, {}};
  for (const auto& [n, e] : cx.assignment) m.env[n] = e;
  const Implication& c = law.clauses.at(cx.clause);
  for (const auto& p : c.premises) {
    if (m.eval(p.lhs) != m.eval(p.rhs)) return false;
  }
  return m.eval(c.conclusion.lhs) != m.eval(c.conclusion.rhs);
}

TEST(Enumeration, KnownCounts) {
  // Lattices on n unlabelled / labelled elements.
  const std::size_t unlabelled[] = {1, 1, 1, 2, 5, 15, 53};
  const std::size_t labelled[] = {1, 2, 6, 36, 380, 6390};
  for (std::size_t n = 1; n <= 7; ++n) {
    EXPECT_EQ(enumerate_lattices(n, true).size(), unlabelled[n - 1]) << n;
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(enumerate_lattices(n).size(), labelled[n - 1]) << n;
  }
  EXPECT_THROW(enumerate_lattices(0), std::exception);
  EXPECT_THROW(enumerate_lattices(8), std::exception);
}

TEST(Enumeration, TablesAreLattices) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& l : enumerate_lattices(n, n > 5)) {
      ASSERT_TRUE(oracle::tables_form_lattice(l)) << describe_order(l);
    }
  }
}

TEST(Enumeration, LabelledOrdersAreDistinct) {
  const auto& ls = enumerate_lattices(5);
  std::set<std::uint64_t> orders;
  for (const auto& l : ls) orders.insert(l.order());
  EXPECT_EQ(orders.size(), ls.size());
}

TEST(Enumeration, FiveElementShapes) {
  bool m3 = false;
  bool n5 = false;
  for (const auto& l : enumerate_lattices(5)) {
    m3 = m3 || isomorphic(l, diamond_m3());
    n5 = n5 || isomorphic(l, pentagon_n5());
  }
  EXPECT_TRUE(m3);
  EXPECT_TRUE(n5);
  EXPECT_EQ(shape_name(diamond_m3()), "M3");
  EXPECT_EQ(shape_name(pentagon_n5()), "N5");
  EXPECT_FALSE(isomorphic(diamond_m3(), pentagon_n5()));
}

TEST(Enumeration, CanonicalFormIsRelabelingInvariant) {
  const FiniteLattice n5 = pentagon_n5();
  const std::vector<E> perm{4, 2, 0, 3, 1};
  EXPECT_EQ(canonical_order(n5), canonical_order(n5.relabeled(perm)));
  EXPECT_TRUE(isomorphic(n5, n5.relabeled(perm)));
}

TEST(CheckModel, TwoChainSeparatesFdaInverse) {
  // R00 and R11 both at the ∧-identity (R01).
  const FiniteLattice l = chain_lattice(2).with_designation(1, 1);
  EXPECT_FALSE(check_model(l, AxiomSet({"FDA"})).has_value());
  auto cx = check_model(l, AxiomSet({"FDA", "FDA-1"}));
  ASSERT_TRUE(cx.has_value());
  EXPECT_EQ(cx->law, "fda-inv");
  EXPECT_EQ(cx->assignment.at("x"), 0);
  EXPECT_TRUE(replays_independently(*cx));
}

TEST(CheckModel, CoincidingConstantsViolateFdaUnlessAbsorbing) {
  // With R00 = R11 = e, fda reads x = x ^ e.
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& base : enumerate_lattices(n)) {
      for (E e = 0; e < n; ++e) {
        const FiniteLattice l = base.with_designation(e, e);
        bool some_x_moves = false;
        for (E x = 0; x < n; ++x) some_x_moves = some_x_moves || l.meet(x, e) != x;
        EXPECT_EQ(find_violation(l, find_law("fda")).has_value(), some_x_moves);
      }
    }
  }
}

TEST(Search, IndependenceModels) {
  struct Case {
    std::vector<std::string> assume;
    const char* refute;
    std::size_t size;
    const char* shape;
  };
  const Case cases[] = {
      {{}, "fda", 2, "chain"},
      {{"FDA"}, "fda-inv", 2, "chain"},
      {{"FDA", "FDA-1"}, "sdc", 5, "M3"},
      {{"FDA", "FDA-1", "SDC"}, "dch", 5, "N5"},
  };
  for (const Case& c : cases) {
    SearchStats stats;
    auto m = find_separating_model(AxiomSet(c.assume), c.refute, 5, &stats);
    ASSERT_TRUE(m.has_value()) << c.refute;
    EXPECT_EQ(m->lattice.size(), c.size) << c.refute;
    EXPECT_EQ(shape_name(m->lattice), c.shape) << c.refute;
    EXPECT_EQ(m->counterexample.law, c.refute);
    EXPECT_TRUE(replays(m->counterexample));
    EXPECT_TRUE(replays_independently(m->counterexample)) << c.refute;
    EXPECT_FALSE(check_model(m->lattice, AxiomSet(c.assume)).has_value()) << c.refute;
  }
}

TEST(Search, RecoveredDesignations) {
  auto sdc = find_separating_model(AxiomSet({"FDA", "FDA-1"}), "sdc", 5);
  ASSERT_TRUE(sdc);
  EXPECT_EQ(describe_order(sdc->lattice), "0<1 0<2 0<3 1<4 2<4 3<4");
  EXPECT_EQ(sdc->lattice.r00(), 0);
  EXPECT_EQ(sdc->lattice.r11(), 4);
  EXPECT_EQ(sdc->counterexample.assignment, (ModelAssignment{{"x", 1}, {"y", 2}, {"z", 3}}));

  auto dch = find_separating_model(AxiomSet({"FDA", "FDA-1", "SDC"}), "dch", 5);
  ASSERT_TRUE(dch);
  EXPECT_EQ(describe_order(dch->lattice), "0<1 0<3 1<2 2<4 3<4");
  EXPECT_EQ(dch->lattice.r00(), 4);
  EXPECT_EQ(dch->lattice.r11(), 0);
  EXPECT_EQ(dch->counterexample.assignment, (ModelAssignment{{"x", 2}, {"y", 1}, {"z", 3}}));

  auto fda = find_separating_model(AxiomSet(), "fda", 5);
  ASSERT_TRUE(fda);
  EXPECT_EQ(fda->lattice.r00(), 0);
  EXPECT_EQ(fda->lattice.r11(), 0);

  auto inv = find_separating_model(AxiomSet({"FDA"}), "fda-inv", 5);
  ASSERT_TRUE(inv);
  EXPECT_EQ(inv->lattice.r00(), 1);
  EXPECT_EQ(inv->lattice.r11(), 1);
  EXPECT_EQ(inv->counterexample.assignment.at("x"), 0);
}

TEST(Search, DchDualHasNoCountermodel) {
  EXPECT_FALSE(
      find_separating_model(AxiomSet({"FDA", "FDA-1", "SDC", "DCH"}), "dch-dual", 5));
}

TEST(Search, FdaDualHasAbstractCountermodel) {
  auto m = find_separating_model(AxiomSet(), "fda-dual", 5);
  ASSERT_TRUE(m);
  EXPECT_TRUE(replays_independently(m->counterexample));
}

TEST(Search, DerivedTheoremsHaveNoSmallCountermodels) {
  for (const TheoremProblem& p : theorem_problems()) {
    EXPECT_FALSE(find_separating_model(p.assumptions, p.goal, 5)) << p.goal;
  }
}

TEST(Output, DotAndText) {
  const FiniteLattice l = diamond_m3().with_designation(0, 4);
  const std::string dot = to_dot(l);
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  EXPECT_NE(dot.find("R00"), std::string::npos);
  EXPECT_NE(dot.find("R11"), std::string::npos);
  auto m = find_separating_model(AxiomSet({"FDA", "FDA-1"}), "sdc", 5);
  ASSERT_TRUE(m);
  const std::string text = format_model(*m);
  EXPECT_NE(text.find("M3"), std::string::npos);
  EXPECT_NE(text.find("x=1 y=2 z=3"), std::string::npos);
}

}  // namespace
}  // namespace rellat
