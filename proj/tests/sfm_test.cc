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
#include <random>

#include "dsmin/errors.h"
#include "dsmin/exhaustive.h"
#include "dsmin/functions.h"
#include "dsmin/sfm.h"
#include "gtest/gtest.h"
#include "test_instances.h"

namespace dsmin {
namespace {

using testing::Modular;
using testing::SqrtCardinality;
using testing::TriangleCut;

TEST(GreedyBaseVertexTest, SqrtWithZeroDirectionUsesIndexOrder) {
  const std::vector<double> dir(3, 0.0);
  const BaseVertex v = GreedyBaseVertex(*SqrtCardinality(3), dir);
  EXPECT_EQ(v.order, (std::vector<int>{0, 1, 2}));
  EXPECT_NEAR(v.coords[0], 1.0, 1e-12);
  EXPECT_NEAR(v.coords[1], std::sqrt(2.0) - 1.0, 1e-12);
  EXPECT_NEAR(v.coords[2], std::sqrt(3.0) - std::sqrt(2.0), 1e-12);
}

TEST(GreedyBaseVertexTest, ModularVertexIsWeights) {
  const std::vector<double> w = {0.5, -2.0, 3.0};
  const std::vector<double> dir = {1.0, -4.0, 0.2};
  EXPECT_EQ(GreedyBaseVertex(*Modular(w), dir).coords, w);
}

TEST(GreedyBaseVertexTest, TriangleCutReverseOrder) {
  const std::vector<double> dir = {3.0, 2.0, 1.0};  // ascending visits 3, 2, 1
  const BaseVertex v = GreedyBaseVertex(*TriangleCut(), dir);
  EXPECT_EQ(v.order, (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(v.coords, (std::vector<double>{-2.0, 0.0, 2.0}));
}

TEST(GreedyBaseVertexTest, VertexLiesInBasePolytopeAndIsTightOnChain) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 9;
    auto f = testing::RandomSubmodular(rng, n);
    std::vector<double> dir(n);
    std::normal_distribution<double> gauss;
    for (double& d : dir) d = gauss(rng);
    const BaseVertex v = GreedyBaseVertex(*f, dir);
    for (std::uint64_t m = 0; m < (1u << n); ++m) {
      const Subset s = Subset::FromMask(n, m);
      double xs = 0.0;
      for (int j : s.elements()) xs += v.coords[j];
      EXPECT_LE(xs, (*f)(s) + 1e-9);
    }
    Subset prefix(n);
    double running = 0.0;
    for (int j : v.order) {
      prefix.insert(j);
      running += v.coords[j];
      EXPECT_NEAR(running, (*f)(prefix), 1e-9);
    }
  }
}

TEST(MinNormPointTest, ModularSelectsNegatives) {
  const SfmResult r = MinNormPoint(*Modular({-1, 2, -3}));
  EXPECT_EQ(r.minimizer, Subset::FromElements(3, {0, 2}));
  EXPECT_NEAR(r.value, -4.0, 1e-12);
}

TEST(MinNormPointTest, TriangleCutMinimalMinimizerIsEmpty) {
  const SfmResult r = MinNormPoint(*TriangleCut());
  EXPECT_TRUE(r.minimizer.empty());
  EXPECT_NEAR(r.value, 0.0, 1e-12);
  for (double xj : r.point) EXPECT_NEAR(xj, 0.0, 1e-9);
}

TEST(MinNormPointTest, SqrtMinusLinear) {
  LambdaFunction v(3, [](const Subset& x) { return std::sqrt(x.size()) - 0.8 * x.size(); });
  const SfmResult r = MinNormPoint(v);
  EXPECT_EQ(r.minimizer, Subset::Full(3));
  EXPECT_NEAR(r.value, std::sqrt(3.0) - 2.4, 1e-9);
}

TEST(MinNormPointTest, RejectsUnnormalizedFunctions) {
  ModularFunction f({1.0, 2.0}, 1.0);
  EXPECT_THROW(MinNormPoint(f), PreconditionError);
}

TEST(MinNormPointTest, CapProducesErrorWithBestSoFar) {
  std::mt19937_64 rng(2);
  auto f = testing::RandomSubmodular(rng, 10);
  try {
    MinNormPoint(*f, {.tol = 1e-10, .max_major_cycles = 1});
    SUCCEED();  // converging in one cycle is legitimate
  } catch (const SfmConvergenceError& e) {
    EXPECT_EQ(e.best_so_far().point.size(), 10u);
    EXPECT_GE(e.best_so_far().gap, 0.0);
  }
}

TEST(MinNormPointTest, MatchesBruteForceOnRandomInstances) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 11;
    auto f = testing::RandomSubmodular(rng, n);
    const SfmResult r = MinNormPoint(*f);
    const SetValue truth = BruteForceMinimize(*f);
    EXPECT_NEAR(r.value, truth.value, 1e-6) << "trial " << trial;
    EXPECT_NEAR((*f)(r.minimizer), r.value, 1e-12);
    // Duality certificate: f(X*) >= sum_j min(x_j, 0) - tol.
    EXPECT_GE(r.value, r.dual_bound - 1e-10);
  }
}

TEST(MinNormPointTest, ReturnsMinimalMinimizer) {
  // Cut of the path 1-2-3: minimizers are the empty set and V.
  GraphCut path(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  EXPECT_TRUE(MinNormPoint(path).minimizer.empty());
  // Adding weights (-2, 0, 1) makes {1}, {1,2} and V tie at -1.
  ScaledSum f({{1.0, std::make_shared<GraphCut>(3, std::vector<WeightedEdge>{{0, 1, 1.0},
                                                                           {1, 2, 1.0}})},
               {1.0, std::make_shared<ModularFunction>(std::vector<double>{-2.0, 0.0, 1.0})}});
  const SetValue truth = BruteForceMinimize(f);
  const SfmResult r = MinNormPoint(f);
  EXPECT_EQ(truth.set, Subset::FromElements(3, {0}));
  EXPECT_EQ(r.minimizer, truth.set);
}

}  // namespace
}  // namespace dsmin
