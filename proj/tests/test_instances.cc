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

#include "test_instances.h"

#include <algorithm>

#include "dsmin/exhaustive.h"

namespace dsmin::testing {

SetFunctionPtr TriangleCut() {
  return std::make_shared<GraphCut>(3, std::vector<WeightedEdge>{{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}});
}

SetFunctionPtr SqrtCardinality(int n, double scale) {
  auto base = std::make_shared<ConcaveOfModular>(ConcaveShape::kSqrt, std::vector<double>(n, 1.0));
  if (scale == 1.0) return base;
  return std::make_shared<ScaledSum>(std::vector<ScaledTerm>{{scale, base}});
}

SetFunctionPtr Modular(std::vector<double> weights) {
  return std::make_shared<ModularFunction>(std::move(weights));
}

namespace {

std::vector<double> Uniform(std::mt19937_64& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(n);
  for (double& x : out) x = dist(rng);
  return out;
}

SetFunctionPtr RandomCut(std::mt19937_64& rng, int n) {
  std::bernoulli_distribution keep(0.5);
  std::uniform_real_distribution<double> w(0.1, 2.0);
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (keep(rng)) edges.push_back({u, v, w(rng)});
    }
  }
  return std::make_shared<GraphCut>(n, std::move(edges));
}

SetFunctionPtr RandomConcave(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> pick(0, 2);
  const auto shape = static_cast<ConcaveShape>(pick(rng));
  auto weights = Uniform(rng, n, 0.0, 2.0);
  const double cap = std::uniform_real_distribution<double>(0.5, 0.5 * n)(rng);
  return std::make_shared<ConcaveOfModular>(shape, std::move(weights), cap);
}

}  // namespace

SetFunctionPtr RandomFacilityLocation(std::mt19937_64& rng, int n, int clients) {
  std::vector<std::vector<double>> benefits;
  for (int i = 0; i < clients; ++i) benefits.push_back(Uniform(rng, n, 0.0, 1.0));
  return std::make_shared<FacilityLocation>(std::move(benefits));
}

SetFunctionPtr RandomSubmodular(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> coef(0.2, 2.0);
  std::vector<ScaledTerm> terms;
  terms.push_back({coef(rng), RandomCut(rng, n)});
  terms.push_back({coef(rng), RandomConcave(rng, n)});
  terms.push_back({coef(rng), RandomFacilityLocation(rng, n, 3)});
  terms.push_back({1.0, std::make_shared<ModularFunction>(Uniform(rng, n, -1.5, 0.5))});
  return std::make_shared<ScaledSum>(std::move(terms));
}

SetFunctionPtr RandomNonNegativeSubmodular(std::mt19937_64& rng, int n) {
  for (;;) {
    std::uniform_real_distribution<double> coef(0.2, 2.0);
    std::vector<ScaledTerm> terms;
    terms.push_back({coef(rng), RandomCut(rng, n)});
    terms.push_back({coef(rng), RandomConcave(rng, n)});
    terms.push_back({coef(rng), RandomFacilityLocation(rng, n, 2)});
    terms.push_back({1.0, std::make_shared<ModularFunction>(Uniform(rng, n, -0.6, 0.2))});
    auto f = std::make_shared<ScaledSum>(std::move(terms));
    const auto table = Tabulate(*f);
    if (*std::min_element(table.begin(), table.end()) >= 0.0) return f;
  }
}

SetFunctionPtr RandomTable(std::mt19937_64& rng, int n) {
  auto values = Uniform(rng, 1 << n, -1.0, 1.0);
  values[0] = 0.0;
  return std::make_shared<ExplicitTable>(n, std::move(values));
}

}  // namespace dsmin::testing
