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

#include "dsmin/errors.h"
#include "dsmin/featsel.h"
#include "dsmin/functions.h"

namespace dsmin {

CostModel CostModel::ModularCardinality(double lambda) {
  CostModel cm;
  cm.kind = Kind::kModularCardinality;
  cm.lambda = lambda;
  return cm;
}

CostModel CostModel::PartitionSqrt(std::vector<std::vector<int>> blocks,
                                   std::vector<double> weights, double lambda) {
  CostModel cm;
  cm.kind = Kind::kPartitionSqrt;
  cm.lambda = lambda;
  cm.blocks = std::move(blocks);
  cm.weights = std::move(weights);
  return cm;
}

void ValidateCostModel(const CostModel& cm, int n) {
  if (!(cm.lambda >= 0.0)) throw DomainError("lambda must be non-negative");
  if (cm.kind == CostModel::Kind::kModularCardinality) return;
  if (!cm.weights.empty() && static_cast<int>(cm.weights.size()) != n) {
    throw DomainError("cost weights need one entry per feature");
  }
  for (double w : cm.weights) {
    if (!(w >= 0.0)) throw DomainError("cost weights must be non-negative");
  }
  std::vector<int> seen(n, 0);
  for (const auto& block : cm.blocks) {
    for (int j : block) {
      if (j < 0 || j >= n) throw DomainError("cost block element out of range");
      if (seen[j]++) throw DomainError("cost blocks overlap");
    }
  }
  for (int j = 0; j < n; ++j) {
    if (!seen[j]) throw DomainError("cost blocks must cover every feature");
  }
}

double EvaluateCost(const CostModel& cm, const Subset& a) {
  if (cm.kind == CostModel::Kind::kModularCardinality) return cm.lambda * a.size();
  double total = 0.0;
  for (const auto& block : cm.blocks) {
    double mass = 0.0;
    for (int j : block) {
      if (a.contains(j)) mass += cm.weights.empty() ? 1.0 : cm.weights[j];
    }
    total += std::sqrt(mass);
  }
  return cm.lambda * total;
}

SetFunctionPtr CostOracle(const CostModel& cm, int n) {
  ValidateCostModel(cm, n);
  if (cm.kind == CostModel::Kind::kModularCardinality) {
    return std::make_shared<ModularFunction>(std::vector<double>(n, cm.lambda));
  }
  return std::make_shared<LambdaFunction>(n, [cm](const Subset& a) { return EvaluateCost(cm, a); });
}

}  // namespace dsmin
