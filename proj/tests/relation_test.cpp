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

#include "gen.hpp"
#include "oracle.hpp"
#include "rellat/error.hpp"
#include "rellat/relation.hpp"
#include "rellat/relation_json.hpp"

namespace rellat {
namespace {

Universe u2() { return Universe({{"x", {"1", "2"}}, {"y", {"a", "b"}}}); }

struct XyFixture {
  Universe u = u2();
  Relation a{{"x"}, {{"1"}}, u};
  Relation b{{"x"}, {{"1"}, {"2"}}, u};
  Relation c{{"y"}, {{"a"}}, u};
  Relation d{{"y"}, {{"a"}, {"b"}}, u};
  Relation x{{"x", "y"}, {{"1", "a"}, {"1", "b"}, {"2", "a"}}, u};
};

TEST(Relation, CanonicalisesHeaderAndRows) {
  Relation r({"y", "x"}, {{"b", "2"}, {"a", "1"}, {"a", "1"}});
  EXPECT_EQ(r.header(), (Header{"x", "y"}));
  EXPECT_EQ(r.rows(), (std::vector<Row>{{"1", "a"}, {"2", "b"}}));
  EXPECT_EQ(to_string(r), "{x,y}[(1,a),(2,b)]");
}

TEST(Relation, RejectsMalformedInput) {
  EXPECT_THROW(Relation({"x", "x"}, {}), InvalidInput);
  EXPECT_THROW(Relation({"x"}, {{"1", "2"}}), InvalidInput);
  EXPECT_THROW(Relation({"z"}, {{"1"}}, u2()), InvalidInput);
  EXPECT_THROW(Relation({"x"}, {{"3"}}, u2()), InvalidInput);
  EXPECT_THROW(Universe(Universe::Domains{{"x", {}}}), InvalidInput);
}

TEST(Relation, MismatchedUniversesAreRejected) {
  Universe other({{"x", {"1", "2", "3"}}});
  Relation a({"x"}, {{"1"}}, u2());
  Relation b({"x"}, {{"3"}}, other);
  EXPECT_THROW(natural_join(a, b), UniverseMismatch);
  EXPECT_THROW(inner_union(a, b), UniverseMismatch);
  EXPECT_THROW(antijoin(a, b), UniverseMismatch);
}

TEST(Relation, JoinExamples) {
  XyFixture f;
  EXPECT_EQ(natural_join(f.a, f.d), Relation({"x", "y"}, {{"1", "a"}, {"1", "b"}}));
  EXPECT_EQ(natural_join(f.b, f.d), universal(f.u));
  EXPECT_EQ(natural_join(f.x, dee()), f.x);
}

TEST(Relation, InnerUnionExamples) {
  XyFixture f;
  EXPECT_EQ(inner_union(f.a, f.b), f.b);
  EXPECT_EQ(inner_union(f.x, dum()), dee());
  EXPECT_EQ(inner_union(f.x, universal(f.u)), universal(f.u));
}

TEST(Relation, Constants) {
  for (const Universe& u : {u2(), Universe()}) {
    EXPECT_EQ(inner_union(dum(), universal(u)), dee());
    EXPECT_EQ(natural_join(dum(), universal(u)), top_empty(u));
  }
  EXPECT_EQ(dum().size(), 0U);
  EXPECT_EQ(dee().size(), 1U);
  EXPECT_TRUE(dee().header().empty());
  EXPECT_EQ(universal(u2()).size(), 4U);
  EXPECT_TRUE(top_empty(u2()).empty());
  EXPECT_EQ(top_empty(u2()).header(), (Header{"x", "y"}));
}

TEST(Relation, DegenerateUniverseCollapsesConstants) {
  const Universe u;
  EXPECT_TRUE(u.is_degenerate());
  EXPECT_EQ(universal(u), dee());
  EXPECT_EQ(top_empty(u), dum());
}

TEST(Relation, ProjectExamples) {
  Relation r({"x", "y"}, {{"1", "a"}, {"2", "a"}});
  EXPECT_EQ(project(r, {"y"}), Relation({"y"}, {{"a"}}));
  EXPECT_EQ(project(r, r.header()), r);
  EXPECT_EQ(project(r, {}), dee());
  EXPECT_EQ(project(r, {"y", "z"}), Relation({"y"}, {{"a"}}));
}

TEST(Relation, AntijoinExamples) {
  const Relation e({"ename", "deptno"}, {{"SMITH", "10"}, {"JONES", "20"}});
  const Relation d({"deptno"}, {{"20"}});
  EXPECT_EQ(antijoin(e, d), Relation({"ename", "deptno"}, {{"SMITH", "10"}}));
  EXPECT_EQ(antijoin(e, Relation({"deptno"}, {})), e);
  EXPECT_EQ(antijoin(e, project(e, {"deptno"})), Relation({"deptno", "ename"}, {}));
}

TEST(Relation, DdOrExamples) {
  XyFixture f;
  const Relation expected({"x", "y"}, {{"1", "a"}, {"1", "b"}, {"2", "a"}});
  EXPECT_EQ(dd_or(f.a, f.c, f.u), expected);
  EXPECT_EQ(dd_or_set_builder(f.a, f.c, f.u), expected);
  EXPECT_EQ(dd_or(f.x, f.x, f.u), f.x);
  EXPECT_EQ(dd_or(f.x, top_empty(f.u), f.u), natural_join(f.x, universal(f.u)));
}

TEST(Relation, OrderExamples) {
  XyFixture f;
  for (const Relation& r : {f.a, f.b, f.c, f.d, f.x, dum(), dee(), universal(f.u)}) {
    const Relation r_bound = r.bound_to(f.u);
    EXPECT_TRUE(le(dee(), r_bound));
    EXPECT_TRUE(le(r_bound, top_empty(f.u)));
    EXPECT_TRUE(le(r_bound, r_bound));
  }
  EXPECT_FALSE(le(top_empty(f.u), dee()));
}

TEST(Relation, JsonRoundTrip) {
  const Universe u = u2();
  const Relation r({"y", "x"}, {{"b", "2"}, {"a", "1"}});
  EXPECT_EQ(relation_from_json(to_json(r)), r);
  EXPECT_EQ(universe_from_json(to_json(u)), u);
  const auto lit = nlohmann::json::parse(R"({"header":["y","x"],"tuples":[["a",1]]})");
  EXPECT_EQ(relation_from_json(lit, u), Relation({"x", "y"}, {{"1", "a"}}));
  EXPECT_THROW(relation_from_json(nlohmann::json::parse(R"({"header":["x"]})")),
               InvalidInput);
}

TEST(Relation, EnvironmentFileForms) {
  const auto flat = nlohmann::json::parse(R"({"A":{"header":["x"],"tuples":[["1"]]}})");
  EXPECT_EQ(environment_from_json(flat).relations.at("A"), Relation({"x"}, {{"1"}}));
  const auto nested = nlohmann::json::parse(
      R"({"universe":{"attributes":{"x":["1","2"]}},
          "relations":{"A":{"header":["x"],"tuples":[["2"]]}}})");
  const Environment env = environment_from_json(nested);
  ASSERT_TRUE(env.universe.has_value());
  ASSERT_NE(env.relations.at("A").universe(), nullptr);
}

// ---- properties against the brute-force oracle -----------------------------

class RelationProperty : public ::testing::Test {
 protected:
  gen::Rng rng{20260917};
};

TEST_F(RelationProperty, OperationsMatchSetBuilderDefinitions) {
  for (int i = 0; i < 400; ++i) {
    const Universe u = gen::universe(rng);
    const Relation a = gen::relation(u, rng);
    const Relation b = gen::relation(u, rng);
    const auto oa = oracle::from(a);
    const auto ob = oracle::from(b);
    ASSERT_EQ(oracle::from(natural_join(a, b)), oracle::join(oa, ob, u)) << a << " " << b;
    ASSERT_EQ(oracle::from(inner_union(a, b)), oracle::inner_union(oa, ob)) << a << " " << b;
    ASSERT_EQ(oracle::from(antijoin(a, b)), oracle::antijoin(oa, ob)) << a << " " << b;
    ASSERT_EQ(oracle::from(dd_or(a, b, u)), oracle::dd_or(oa, ob, u)) << a << " " << b;
  }
}

TEST_F(RelationProperty, DdOrRoutesAgree) {
  for (int i = 0; i < 400; ++i) {
    const Universe u = gen::universe(rng);
    const Relation a = gen::relation(u, rng);
    const Relation b = gen::relation(u, rng);
    ASSERT_EQ(dd_or(a, b, u), dd_or_set_builder(a, b, u)) << a << " " << b;
  }
}

TEST_F(RelationProperty, LatticeIdentities) {
  for (int i = 0; i < 300; ++i) {
    const Universe u = gen::universe(rng);
    const Relation x = gen::relation(u, rng);
    const Relation y = gen::relation(u, rng);
    const Relation z = gen::relation(u, rng);
    const Relation r00 = dum();
    const Relation r11 = universal(u);
    ASSERT_EQ(natural_join(x, y), natural_join(y, x));
    ASSERT_EQ(inner_union(x, y), inner_union(y, x));
    ASSERT_EQ(natural_join(natural_join(x, y), z), natural_join(x, natural_join(y, z)));
    ASSERT_EQ(inner_union(inner_union(x, y), z), inner_union(x, inner_union(y, z)));
    ASSERT_EQ(natural_join(x, inner_union(x, y)), x);
    ASSERT_EQ(inner_union(x, natural_join(x, y)), x);
    ASSERT_EQ(natural_join(x, x), x);
    ASSERT_EQ(inner_union(x, x), x);
    // x = (x ∧ R00) ∨ (x ∧ R11)
    ASSERT_EQ(inner_union(natural_join(x, r00), natural_join(x, r11)), x);
    // R00 ∧ (x ∨ R11) = x ∧ R00
    ASSERT_EQ(natural_join(r00, inner_union(x, r11)), natural_join(x, r00));
  }
}

TEST_F(RelationProperty, AntijoinSolvesDefiningEquations) {
  for (int i = 0; i < 300; ++i) {
    const Universe u = gen::universe(rng);
    const Relation e = gen::relation(u, rng);
    const Relation d = gen::relation(u, rng);
    const Relation ed = natural_join(e, d);
    const Relation emd = antijoin(e, d);
    ASSERT_EQ(inner_union(ed, emd), e);
    ASSERT_EQ(natural_join(ed, emd), natural_join(ed, dum()));
  }
}

// Under le, natural join is the least upper bound and inner union the
// greatest lower bound.
TEST_F(RelationProperty, OrderIsPartialWithJoinAndUnionAsBounds) {
  for (int i = 0; i < 300; ++i) {
    const Universe u = gen::universe(rng, 2, 2);
    const Relation a = gen::relation(u, rng);
    const Relation b = gen::relation(u, rng);
    const Relation c = gen::relation(u, rng);
    ASSERT_TRUE(le(a, a));
    if (le(a, b) && le(b, a)) {
      ASSERT_EQ(a, b);
    }
    if (le(a, b) && le(b, c)) {
      ASSERT_TRUE(le(a, c));
    }

    const Relation lub = natural_join(a, b);
    ASSERT_TRUE(le(a, lub) && le(b, lub));
    if (le(a, c) && le(b, c)) {
      ASSERT_TRUE(le(lub, c));
    }

    const Relation glb = inner_union(a, b);
    ASSERT_TRUE(le(glb, a) && le(glb, b));
    if (le(c, a) && le(c, b)) {
      ASSERT_TRUE(le(c, glb));
    }
  }
}

TEST_F(RelationProperty, HashAgreesWithEquality) {
  for (int i = 0; i < 200; ++i) {
    const Universe u = gen::universe(rng, 2, 2);
    const Relation a = gen::relation(u, rng);
    const Relation b(a.header(), a.rows());
    ASSERT_EQ(a, b);
    ASSERT_EQ(a.hash(), b.hash());
  }
}

}  // namespace
}  // namespace rellat
