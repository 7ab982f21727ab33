// Copyright 2026 The adjprobe Authors.
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

#include "adjprobe/denotation.h"

#include <random>
#include <sstream>

#include "adjprobe/errors.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace adjprobe {
namespace {

using S = IndividualSet;

// Jaccard distance by explicit membership counting.
double SlowJaccard(S x, S y) {
  int both = 0, either = 0;
  for (int i = 0; i < 64; ++i) {
    both += x.contains(i) && y.contains(i);
    either += x.contains(i) || y.contains(i);
  }
  return either == 0 ? 0.0 : 1.0 - static_cast<double>(both) / either;
}

TEST(IndividualSetTest, Basics) {
  const S a = S::Of({0, 1, 5});
  EXPECT_EQ(a.size(), 3);
  EXPECT_TRUE(a.contains(5));
  EXPECT_FALSE(a.contains(2));
  EXPECT_EQ(S::Universe(3), S::Of({0, 1, 2}));
  EXPECT_EQ(S::Universe(64).size(), 64);
  EXPECT_EQ(a.Minus(S::Of({1})), S::Of({0, 5}));
  EXPECT_TRUE(S::Of({1}).IsSubsetOf(a));
  EXPECT_TRUE(S().IsSubsetOf(S()));
}

TEST(JaccardTest, KnownValues) {
  EXPECT_DOUBLE_EQ(JaccardDistance(S::Of({0, 1}), S::Of({1, 2})), 2.0 / 3.0);
  EXPECT_EQ(JaccardDistance(S(), S()), 0.0);
  EXPECT_EQ(JaccardDistance(S::Of({3}), S()), 1.0);
  EXPECT_EQ(JaccardDistance(S::Of({3, 4}), S::Of({4, 3})), 0.0);
  EXPECT_EQ(JaccardDistance(S::Of({0}), S::Of({1})), 1.0);
}

TEST(SetRelationsTest, PrivativeCounterexample) {
  const S noun = S::Of({0, 1});
  const S adjective = S::Of({1, 2});
  const S phrase = S::Of({3});
  EXPECT_FALSE(IntersectivityHolds(phrase, noun, adjective));
  EXPECT_TRUE(IntersectivityHolds(noun & adjective, noun, adjective));
}

TEST(SetRelationsTest, MultiTermAndNonSubsectivity) {
  const std::vector<S> terms = {S::Of({0, 1, 2}), S::Of({1, 2, 3}),
                                S::Of({2, 1, 4})};
  EXPECT_TRUE(MultiTermIntersectivityHolds(S::Of({1, 2}), terms));
  EXPECT_FALSE(MultiTermIntersectivityHolds(S::Of({5}), terms));
  EXPECT_TRUE(NonSubsectivityHolds(S::Of({0, 1}), S::Of({0, 1, 2}), S::Of({2, 3})));
  EXPECT_FALSE(NonSubsectivityHolds(S::Of({2, 3}), S::Of({0, 1}), S::Of({2, 3})));
  // Equal distances satisfy the non-strict relation.
  EXPECT_TRUE(NonSubsectivityHolds(S::Of({0}), S::Of({1}), S::Of({2})));
}

TEST(SetRelationsTest, MultiTermExamples) {
  // Identical term sets: every distance is 0.
  const std::vector<S> same = {S::Of({1, 2}), S::Of({1, 2}), S::Of({1, 2})};
  EXPECT_TRUE(MultiTermIntersectivityHolds(S::Of({1, 2}), same));
  // Pairwise disjoint terms: P is empty and everything sits at distance 1.
  const std::vector<S> disjoint = {S::Of({0}), S::Of({1, 2}), S::Of({3})};
  EXPECT_TRUE(MultiTermIntersectivityHolds(S(), disjoint));
  // Nested A in B in W with P = A.
  const std::vector<S> nested = {S::Of({0}), S::Of({0, 1}), S::Of({0, 1, 2})};
  EXPECT_FALSE(MultiTermIntersectivityHolds(S::Of({0}), nested));
  // Unlike the two-term case, intersection does not guarantee the relation with
  // three terms: two equal adjectives pin the minimum pair distance at 0.
  const std::vector<S> tight = {S::Of({0, 1}), S::Of({0, 1}), S::Of({1, 2})};
  EXPECT_FALSE(MultiTermIntersectivityHolds(S::Of({1}), tight));
}

TEST(SetRelationsTest, NiClosedForms) {
  // P inside A and N with |A| = |N|: equal distances, satisfied.
  EXPECT_TRUE(NonSubsectivityHolds(S::Of({0}), S::Of({0, 1}), S::Of({0, 2})));
  // |A| > |N| with P nonempty: the adjective side is strictly farther.
  EXPECT_FALSE(NonSubsectivityHolds(S::Of({0}), S::Of({0, 1, 3}), S::Of({0, 2})));
  // Privative image disjoint from N always satisfies it.
  EXPECT_TRUE(NonSubsectivityHolds(S::Of({5}), S::Of({4, 6}), S::Of({0, 1})));
}

TEST(OperatorTest, Compose) {
  DenotationUniverse u(6);
  u.AddNoun("gun", S::Of({1, 2, 3}));
  u.AddNoun("dog", S::Of({0, 1}));
  u.AddIntersective("red", S::Of({0, 2, 4}));
  u.AddOperator("skilful", MakeSubsective(S::Of({0, 1, 2})));
  u.AddOperator("fake", MakePrivative(S::Of({0, 4}), u.all()));
  u.AddOperator("former", MakePlain(S::Of({1}), S::Of({5}), u.all()));

  EXPECT_EQ(u.Compose("red", "gun"), S::Of({2}));
  EXPECT_EQ(u.Compose("skilful", "gun"), S::Of({1, 2}));
  EXPECT_EQ(u.Compose("fake", "dog"), S::Of({4}));
  EXPECT_EQ(u.Compose("former", "dog"), S::Of({1, 5}));
  EXPECT_TRUE(u.IsIntersective("red"));
  EXPECT_FALSE(u.IsIntersective("fake"));

  // Rightmost first: red(fake(gun)) = red & {0, 4} = {0, 4}.
  const std::vector<std::string> red_fake = {"red", "fake"};
  EXPECT_EQ(u.ComposeMany(red_fake, "gun"), S::Of({0, 4}));
  // fake(red(gun)) = {0, 4} minus {2}.
  const std::vector<std::string> fake_red = {"fake", "red"};
  EXPECT_EQ(u.ComposeMany(fake_red, "gun"), S::Of({0, 4}));

  EXPECT_EQ(u.ProxySet("red"), S::Of({0, 2, 4}));
  // fake(gun) | fake(dog) = {0, 4} | {4}.
  EXPECT_EQ(u.ProxySet("fake"), S::Of({0, 4}));

  EXPECT_THROW(u.Compose("blue", "gun"), ContractError);
  EXPECT_THROW(u.Compose("red", "cat"), ContractError);
  EXPECT_THROW(u.AddNoun("gun", S::Of({1})), ContractError);
  EXPECT_THROW(u.AddNoun("far", S::Of({7})), ContractError);
}

TEST(OperatorTest, ContractViolationsRejected) {
  DenotationUniverse u(4);
  u.AddNoun("n", S::Of({0, 1}));
  SetOperator bad_subsective{OperatorKind::kSubsective,
                             [](S) { return S::Of({3}); }};
  EXPECT_THROW(u.AddOperator("bad", bad_subsective), ContractError);
  SetOperator bad_privative{OperatorKind::kPrivative, [](S in) { return in; }};
  EXPECT_THROW(u.AddOperator("worse", bad_privative), ContractError);
  EXPECT_THROW(DenotationUniverse(0), ContractError);
  EXPECT_THROW(DenotationUniverse(65), ContractError);
}

TEST(DenotationTheoremTest, ExhaustiveSmallUniverses) {
  const ExhaustiveCount count = ExhaustiveIntersectionCheck(6);
  // Sum over s = 1..6 of (2^s - 1)^2 nonempty (C, W) pairs.
  EXPECT_EQ(count.checked, 5214u);
  EXPECT_EQ(count.satisfied, count.checked);
}

TEST(DenotationPropertyTest, JaccardMatchesCounting) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const S x = S::FromBits(rng() & rng());
    const S y = S::FromBits(rng() & rng());
    ASSERT_NEAR(JaccardDistance(x, y), SlowJaccard(x, y), 1e-15);
    ASSERT_EQ(JaccardDistance(x, y), JaccardDistance(y, x));
  }
}

// Intersection always satisfies both conjuncts, at any universe size.
TEST(DenotationPropertyTest, IntersectionOnWideUniverses) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 1000; ++trial) {
    const S noun = S::FromBits(rng());
    const S adjective = S::FromBits(rng() & rng());
    ASSERT_TRUE(IntersectivityHolds(noun & adjective, noun, adjective));
    const std::vector<S> terms = {adjective, noun};
    ASSERT_TRUE(MultiTermIntersectivityHolds(noun & adjective, terms));
  }
}

// A nonempty privative image is disjoint from the noun, so d(P, N) = 1.
TEST(DenotationPropertyTest, PrivativeImageIsFarFromNoun) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 1000; ++trial) {
    const int size = 1 + static_cast<int>(rng() % 64);
    const S all = S::Universe(size);
    const S noun = S::FromBits(rng()) & all;
    const SetOperator op = MakePrivative(S::FromBits(rng()) & all, all);
    const S phrase = op.apply(noun);
    ASSERT_TRUE((phrase & noun).empty());
    if (!phrase.empty()) ASSERT_EQ(JaccardDistance(phrase, noun), 1.0);
  }
}

TEST(SimulationTest, IntersectiveAlwaysSatisfiesIntersectivity) {
  const SetRelationReport report = RunSimulation(7, 12, 10000);
  ASSERT_TRUE(report[Category::kIntersective].has_value());
  const CategoryReport& cat = *report[Category::kIntersective];
  EXPECT_EQ(cat.intersectivity.rate(), 1.0);
  EXPECT_FALSE(cat.uses_proxy_set);
  ASSERT_TRUE(report[Category::kPrivative].has_value());
  EXPECT_EQ(report[Category::kPrivative]->noun_distance_one.rate(), 1.0);
  EXPECT_TRUE(report[Category::kPrivative]->uses_proxy_set);
  std::size_t trials = 0;
  for (const auto& c : report.categories) trials += c ? c->trials : 0;
  EXPECT_EQ(trials, 10000u);
}

TEST(SimulationTest, DeterministicAcrossWorkerCounts) {
  EXPECT_EQ(RunSimulation(5, 10, 500, {}, 1), RunSimulation(5, 10, 500, {}, 3));
  EXPECT_FALSE(RunSimulation(5, 10, 500) == RunSimulation(6, 10, 500));
}

TEST(SimulationTest, ZeroWeightCategoryIsAbsent) {
  const SetRelationReport report =
      RunSimulation(1, 8, 200, CategoryMix{{1, 1, 0, 1}});
  EXPECT_FALSE(report[Category::kPrivative].has_value());
  EXPECT_TRUE(report[Category::kPlain].has_value());
  std::ostringstream out;
  WriteSimulationReport(report, "abc", out);
  EXPECT_NE(out.str().find(
                "{\"record\":\"category\",\"category\":\"privative\","
                "\"present\":false}"),
            std::string::npos)
      << out.str();
  EXPECT_NE(FormatSimulationTable(report).find("intersective"),
            std::string::npos);
}

TEST(SimulationTest, SingleTrialRatesAreZeroOrOne) {
  const SetRelationReport report = RunSimulation(3, 12, 1);
  int present = 0;
  for (const auto& cat : report.categories) {
    if (!cat) continue;
    ++present;
    for (const RelationTally* t : {&cat->intersectivity, &cat->multi_term, &cat->non_subsectivity}) {
      ASSERT_TRUE(t->rate().has_value());
      EXPECT_TRUE(*t->rate() == 0.0 || *t->rate() == 1.0);
    }
  }
  EXPECT_EQ(present, 1);
}

TEST(SimulationTest, InvalidArguments) {
  EXPECT_THROW(RunSimulation(1, 12, 0), ContractError);
  EXPECT_THROW(RunSimulation(1, 12, 10, CategoryMix{{0, 0, 0, 0}}),
               ContractError);
  EXPECT_THROW(RunSimulation(1, 0, 10), ContractError);
}

TEST(SimulationTest, ReportRecordsAreJson) {
  const SetRelationReport report = RunSimulation(2, 12, 100);
  std::istringstream lines([&] {
    std::ostringstream out;
    WriteSimulationReport(report, "digest", out);
    return out.str();
  }());
  std::string line;
  int records = 0;
  while (std::getline(lines, line)) {
    EXPECT_TRUE(nlohmann::json::accept(line)) << line;
    ++records;
  }
  EXPECT_EQ(records, 5);
}

}  // namespace
}  // namespace adjprobe
