// Copyright 2026 The Authors.
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

#include <cmath>
#include <numeric>
#include <random>

#include "dsmin/errors.h"
#include "dsmin/exhaustive.h"
#include "dsmin/function_spec.h"
#include "dsmin/functions.h"
#include "gtest/gtest.h"
#include "test_instances.h"

namespace dsmin {
namespace {

using testing::Modular;
using testing::SqrtCardinality;
using testing::TriangleCut;

TEST(SubsetTest, SetAlgebraAndOrdering) {
  const Subset a = Subset::FromElements(5, {0, 2});
  const Subset b = Subset::FromElements(5, {2, 3});
  EXPECT_EQ((a | b).elements(), (std::vector<int>{0, 2, 3}));
  EXPECT_EQ((a & b).elements(), (std::vector<int>{2}));
  EXPECT_EQ((a - b).elements(), (std::vector<int>{0}));
  EXPECT_EQ(a.Complement().elements(), (std::vector<int>{1, 3, 4}));
  EXPECT_TRUE(a < b);  // {1,3} before {3,4}
  EXPECT_TRUE(Subset::FromElements(5, {4}) < a);  // smaller cardinality first
  EXPECT_EQ(a.ToString(), "{1,3}");
  EXPECT_THROW(a.contains(5), DomainError);
}

TEST(SubsetTest, WideUniverse) {
  Subset s(130);
  s.insert(0);
  s.insert(64);
  s.insert(129);
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.elements(), (std::vector<int>{0, 64, 129}));
  EXPECT_EQ(s.Complement().size(), 127);
  EXPECT_TRUE(Subset::FromElements(130, {0, 65, 129}) > s);
}

TEST(GainTest, SqrtCardinality) {
  auto f = SqrtCardinality(3);
  EXPECT_NEAR(Gain(*f, 1, Subset::FromElements(3, {0})), std::sqrt(2.0) - 1.0, 1e-12);
}

TEST(GainTest, ModularGainIsWeight) {
  auto f = Modular({3, 1, 2});
  EXPECT_DOUBLE_EQ(Gain(*f, 2, Subset::FromElements(3, {0})), 2.0);
}

TEST(GainTest, TriangleCut) {
  EXPECT_DOUBLE_EQ(Gain(*TriangleCut(), 1, Subset::FromElements(3, {0})), 0.0);
}

TEST(GainTest, CallAccounting) {
  auto f = SqrtCardinality(3);
  f->ResetCallCount();
  Gain(*f, 1, Subset::FromElements(3, {0}));
  EXPECT_EQ(f->call_count(), 2);
  EXPECT_DOUBLE_EQ(Gain(*f, 0, Subset::FromElements(3, {0})), 0.0);
  EXPECT_EQ(f->call_count(), 2);
}

TEST(GainTest, OutOfRangeIsDomainError) {
  auto f = SqrtCardinality(3);
  EXPECT_THROW(Gain(*f, 3, Subset(3)), DomainError);
  EXPECT_THROW(Gain(*f, -1, Subset(3)), DomainError);
}

TEST(GainTest, TelescopesAlongAnyPermutation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 6;
    auto f = testing::RandomSubmodular(rng, n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Subset prefix(n);
    double total = 0.0;
    for (int j : order) {
      total += Gain(*f, j, prefix);
      prefix.insert(j);
    }
    EXPECT_NEAR(total, (*f)(Subset::Full(n)) - (*f)(Subset(n)), 1e-9);
  }
}

TEST(ChainTest, MatchesPointwiseAndCounts) {
  std::mt19937_64 rng(3);
  auto f = testing::RandomSubmodular(rng, 5);
  const std::vector<int> order = {3, 0, 4};
  std::vector<double> chain(4);
  f->ResetCallCount();
  f->EvaluateChain(order, chain);
  EXPECT_EQ(f->call_count(), 4);
  Subset prefix(5);
  EXPECT_NEAR(chain[0], (*f)(prefix), 1e-12);
  for (int i = 0; i < 3; ++i) {
    prefix.insert(order[i]);
    EXPECT_NEAR(chain[i + 1], (*f)(prefix), 1e-12);
  }
}

TEST(MemoizedTest, InnerSeesOnlyMisses) {
  auto inner = SqrtCardinality(4);
  MemoizedFunction memo(inner);
  inner->ResetCallCount();
  const Subset s = Subset::FromElements(4, {1, 2});
  EXPECT_DOUBLE_EQ(memo(s), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(memo(s), std::sqrt(2.0));
  EXPECT_EQ(memo.call_count(), 2);
  EXPECT_EQ(inner->call_count(), 1);
}

TEST(BruteForceTest, ModularSelectsNegatives) {
  const auto r = BruteForceMinimize(*Modular({-1, 2, -3}));
  EXPECT_EQ(r.set, Subset::FromElements(3, {0, 2}));
  EXPECT_DOUBLE_EQ(r.value, -4.0);
}

TEST(BruteForceTest, TriangleCutPrefersEmpty) {
  const auto r = BruteForceMinimize(*TriangleCut());
  EXPECT_TRUE(r.set.empty());
  EXPECT_DOUBLE_EQ(r.value, 0.0);
}

TEST(BruteForceTest, SqrtMinusLinear) {
  LambdaFunction v(3, [](const Subset& x) { return std::sqrt(x.size()) - 0.8 * x.size(); });
  const auto r = BruteForceMinimize(v);
  EXPECT_EQ(r.set, Subset::Full(3));
  EXPECT_NEAR(r.value, std::sqrt(3.0) - 2.4, 1e-12);
}

TEST(BruteForceTest, RefusesLargeGroundSets) {
  LambdaFunction v(26, [](const Subset&) { return 0.0; });
  EXPECT_THROW(BruteForceMinimize(v), TooLargeError);
}

TEST(CheckSubmodularTest, Examples) {
  EXPECT_TRUE(CheckSubmodular(*SqrtCardinality(3)));
  EXPECT_TRUE(CheckSubmodular(*Modular({1, -2, 0.5})));
  LambdaFunction both(3, [](const Subset& x) {
    return (x.contains(0) && x.contains(1)) ? 1.0 : 0.0;
  });
  EXPECT_FALSE(CheckSubmodular(both));
  EXPECT_DOUBLE_EQ(SubmodularityMargin(both), -1.0);
}

TEST(CheckSubmodularTest, RefusesLargeGroundSets) {
  LambdaFunction v(17, [](const Subset&) { return 0.0; });
  EXPECT_THROW(CheckSubmodular(v), TooLargeError);
}

// Direct O(n 3^n) definition of the margin, as an independent oracle for the
// subset-minimum sweep.
double NaiveMargin(const SetFunction& f) {
  const int n = f.n();
  double margin = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    for (std::uint64_t y = 0; y < (1u << n); ++y) {
      if (y == 0 || (y & (1u << j))) continue;
      const Subset ys = Subset::FromMask(n, y);
      const double gy = Gain(f, j, ys);
      for (std::uint64_t x = (y - 1) & y;; x = (x - 1) & y) {
        margin = std::min(margin, Gain(f, j, Subset::FromMask(n, x)) - gy);
        if (x == 0) break;
      }
    }
  }
  return margin;
}

TEST(CheckSubmodularTest, MarginMatchesNaiveDefinition) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto t = testing::RandomTable(rng, 5);
    EXPECT_NEAR(SubmodularityMargin(*t), NaiveMargin(*t), 1e-12);
    auto s = testing::RandomSubmodular(rng, 5);
    EXPECT_NEAR(SubmodularityMargin(*s), NaiveMargin(*s), 1e-12);
  }
}

TEST(CheckSubmodularTest, BuiltInFamiliesAreSubmodular) {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 10; ++n) {
    EXPECT_TRUE(CheckSubmodular(*testing::RandomSubmodular(rng, n))) << "n=" << n;
    EXPECT_TRUE(CheckSubmodular(*testing::RandomFacilityLocation(rng, n, 4))) << "n=" << n;
    EXPECT_TRUE(CheckSubmodular(*testing::RandomNonNegativeSubmodular(rng, n))) << "n=" << n;
  }
}

TEST(FunctionSpecTest, BuildExamples) {
  auto modular = BuildFunction(ParseFunctionSpec(
      nlohmann::json::parse(R"({"kind":"modular","weights":[1,2,3]})")));
  EXPECT_DOUBLE_EQ((*modular)(Subset::FromElements(3, {1, 2})), 5.0);

  auto cut = BuildFunction(ParseFunctionSpec(nlohmann::json::parse(
      R"({"kind":"graph_cut","n":3,"edges":[[1,2],[1,3],[2,3]]})")));
  EXPECT_DOUBLE_EQ((*cut)(Subset::FromElements(3, {0})), 2.0);
  EXPECT_DOUBLE_EQ((*cut)(Subset::Full(3)), 0.0);

  auto scaled = BuildFunction(ParseFunctionSpec(nlohmann::json::parse(R"({
    "kind":"scaled_sum",
    "terms":[{"coefficient":2.0,
              "function":{"kind":"concave_of_modular","shape":"sqrt","weights":[1]}}]})")));
  EXPECT_DOUBLE_EQ((*scaled)(Subset::Full(1)), 2.0);
}

TEST(FunctionSpecTest, MalformedSpecsAreRejected) {
  auto parse = [](const char* text) { return ParseFunctionSpec(nlohmann::json::parse(text)); };
  EXPECT_THROW(parse(R"({"kind":"nope"})"), ParseError);
  EXPECT_THROW(parse(R"({"kind":"graph_cut","n":3,"edges":[[1,4]]})"), ParseError);
  EXPECT_THROW(parse(R"({"kind":"explicit_table","n":2,"values":[0,1,2]})"), ParseError);
  EXPECT_THROW(parse(R"({"kind":"modular"})"), ParseError);
  EXPECT_THROW(BuildFunction(parse(R"({"kind":"concave_of_modular","weights":[1,-1]})")),
               DomainError);
}

TEST(FunctionSpecTest, JsonRoundTripPreservesValues) {
  const auto doc = nlohmann::json::parse(R"({
    "kind":"scaled_sum",
    "terms":[
      {"coefficient":1.5,"function":{"kind":"graph_cut","n":4,"edges":[[1,2,0.5],[3,4,2]]}},
      {"coefficient":1.0,"function":{"kind":"facility_location","benefits":[[1,0,2,0.5]]}},
      {"coefficient":0.5,"function":{"kind":"concave_of_modular","shape":"cap","cap":1.5,
                                     "weights":[1,1,1,1]}},
      {"coefficient":1.0,"function":{"kind":"modular","weights":[-1,0,1,2]}}]})");
  const FunctionSpec spec = ParseFunctionSpec(doc);
  auto a = BuildFunction(spec);
  auto b = BuildFunction(ParseFunctionSpec(ToJson(spec)));
  for (std::uint64_t m = 0; m < 16; ++m) {
    const Subset s = Subset::FromMask(4, m);
    EXPECT_DOUBLE_EQ((*a)(s), (*b)(s));
  }
  EXPECT_TRUE(CheckSubmodular(*a));
}

}  // namespace
}  // namespace dsmin
