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

#include "descent.h"
#include "dsmin/bounds.h"
#include "dsmin/errors.h"
#include "dsmin/exhaustive.h"

namespace dsmin {

OptimizationTrace SupSub(const DSInstance& inst, const SolverOptions& opts,
                         const Constraint& constraint) {
  const int n = inst.n();
  std::optional<int> max_size;
  if (const auto* le = std::get_if<CardinalityLe>(&constraint.body)) {
    max_size = le->k;
  } else if (!constraint.is_none()) {
    throw DomainError("supsub supports only none or card_le constraints, not " +
                      constraint.kind());
  }
  ValidateConstraint(constraint, n);

  // g - m_x as a function to maximize.
  auto surrogate = [&](const Subset& x, UpperBoundVariant variant) {
    return internal::MinusModular(inst.g(), ModularUpperBound(*inst.f(), x, variant));
  };
  auto maximize = [&](const Subset& x, UpperBoundVariant variant, int t) {
    const SetFunctionPtr q = surrogate(x, variant);
    if (opts.inner == InnerSolver::kBruteForce) return BruteForceMaximize(*q, max_size).set;
    if (max_size) {
      const MaximizerResult r = GreedyCardinalityMax(*q, *max_size);
      return LocalSearchMax(*q, r.set, max_size).set;
    }
    const MaximizerResult r = DoubleGreedy(
        *q, opts.double_greedy_mode,
        internal::MixSeed(opts.seed, t, static_cast<std::uint64_t>(variant)));
    return LocalSearchMax(*q, r.set).set;
  };
  auto variant_at = [](int t) {
    return t % 2 == 0 ? UpperBoundVariant::kFirst : UpperBoundVariant::kSecond;
  };
  const bool both = opts.upper_bound_strategy == UpperBoundStrategy::kBestOfBoth;

  auto main_step = [&](const Subset& x, int t) {
    std::vector<Subset> out;
    if (both) {
      out.push_back(maximize(x, UpperBoundVariant::kFirst, t));
      out.push_back(maximize(x, UpperBoundVariant::kSecond, t));
    } else {
      out.push_back(maximize(x, variant_at(t), t));
    }
    return out;
  };
  // Alternating runs first try the variant skipped this iteration. Then a
  // local search from x under each bound: m_1 is exact at every x - j and
  // m_2 at every x + j, so any improving neighbor of x is found.
  auto sweep = [&](const Subset& x, int t, int k) -> std::optional<Subset> {
    if (!both) {
      if (k == 0) return maximize(x, variant_at(t + 1), t);
      --k;
    }
    if (k >= 2) return std::nullopt;
    const auto variant = k == 0 ? UpperBoundVariant::kFirst : UpperBoundVariant::kSecond;
    return LocalSearchMax(*surrogate(x, variant), x, max_size).set;
  };
  return internal::RunDescent(inst, opts, constraint, "supsub", Subset(n), main_step, sweep);
}

}  // namespace dsmin
