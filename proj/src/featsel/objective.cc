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

#include "dsmin/errors.h"
#include "dsmin/featsel.h"
#include "dsmin/functions.h"
#include "row_groups.h"

namespace dsmin {

FeatSelObjective BuildObjective(DatasetPtr ds, const CostModel& cost, double alpha, MiMode mode) {
  const int n = ds->features();
  SetFunctionPtr conditional =
      std::make_shared<MemoizedFunction>(ConditionalEntropyOracle(ds, alpha, mode));
  SetFunctionPtr entropy = std::make_shared<MemoizedFunction>(EntropyOracle(ds, alpha));
  SetFunctionPtr cost_fn = CostOracle(cost, n);
  auto f = std::make_shared<ScaledSum>(
      std::vector<ScaledTerm>{{1.0, conditional}, {1.0, cost_fn}});
  return FeatSelObjective{DSInstance(f, entropy), mode, conditional, entropy, cost_fn};
}

GreedySelection GreedySelect(DatasetPtr ds, const CostModel& cost, GreedyMode mode,
                             std::optional<int> budget, double alpha) {
  const int n = ds->features();
  ValidateCostModel(cost, n);
  if (!(alpha >= 0.0)) throw DomainError("smoothing alpha must be non-negative");
  const int limit = budget.value_or(n);
  if (limit < 0 || limit > n) throw DomainError("budget must lie in 0..n");

  // Factored mode prices each feature's conditional entropy separately.
  std::vector<double> single(n, 0.0);
  if (mode == GreedyMode::kGrF) {
    for (int j = 0; j < n; ++j) {
      internal::RowGroups g(*ds);
      g.Refine(j);
      single[j] = g.ConditionalEntropy(alpha);
    }
  }

  GreedySelection out{Subset(n), {}, {0.0}};
  internal::RowGroups current(*ds);
  double factored_sum = 0.0;
  double value = 0.0;
  while (static_cast<int>(out.order.size()) < limit) {
    int best = -1;
    double best_value = value;
    internal::RowGroups best_groups = current;
    for (int j = 0; j < n; ++j) {
      if (out.selected.contains(j)) continue;
      internal::RowGroups next = current;
      next.Refine(j);
      const double conditional = mode == GreedyMode::kGrF ? factored_sum + single[j]
                                                          : next.ConditionalEntropy(alpha);
      const double candidate =
          conditional + EvaluateCost(cost, out.selected.With(j)) - next.Entropy(alpha);
      if (candidate < value - 1e-12 && (best < 0 || candidate < best_value)) {
        best = j;
        best_value = candidate;
        best_groups = std::move(next);
      }
    }
    if (best < 0) break;
    out.selected.insert(best);
    out.order.push_back(best);
    out.values.push_back(best_value);
    current = std::move(best_groups);
    factored_sum += single[best];
    value = best_value;
  }
  return out;
}

}  // namespace dsmin
