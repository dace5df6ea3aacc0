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

#include "descent.h"
#include "dsmin/bounds.h"

namespace dsmin {
namespace {

constexpr double kZeroWeight = 1e-12;
constexpr double kTieNudge = 1e-9;

}  // namespace

OptimizationTrace ModMod(const DSInstance& inst, const SolverOptions& opts,
                         const Constraint& constraint) {
  const int n = inst.n();
  ValidateConstraint(constraint, n);
  const SetFunction& scorer =
      opts.heuristic == PermutationHeuristic::kVGain ? *inst.v() : *inst.g();

  auto minimize_surrogate = [&](const Subset& x, const Permutation& sigma,
                                UpperBoundVariant variant) {
    const AffineModular m = ModularUpperBound(*inst.f(), x, variant);
    const AffineModular h = ModularLowerBound(*inst.g(), x, sigma);
    return ModularMinimizeConstrained(m - h, constraint);
  };
  // The heuristic permutation at iteration t, shared by the main step and
  // the sweep.
  std::optional<std::pair<int, Permutation>> cached;
  auto sigma_at = [&](const Subset& x, int t) -> const Permutation& {
    if (!cached || cached->first != t) {
      cached.emplace(t, ChoosePermutation(opts.heuristic, x, scorer,
                                          internal::MixSeed(opts.seed, t, 0)));
    }
    return cached->second;
  };

  // When the empty set is infeasible, start from the surrogate minimizer
  // at the empty set so every recorded iterate is feasible.
  Subset start(n);
  if (!IsFeasible(constraint, start)) {
    const Permutation sigma =
        ChoosePermutation(opts.heuristic, start, scorer, internal::MixSeed(opts.seed, 0, 1));
    start = minimize_surrogate(start, sigma, UpperBoundVariant::kFirst);
  }

  // Each surrogate also offers a largest minimizer: zero weights are nudged
  // below zero so the constrained minimizer takes them where feasible. It
  // only matters for moves between ties, e.g. leaving a flat empty set.
  auto largest_minimizer = [&](AffineModular surrogate) {
    for (double& w : surrogate.weights) {
      if (std::abs(w) <= kZeroWeight) w = -kTieNudge;
    }
    return ModularMinimizeConstrained(surrogate, constraint);
  };
  auto main_step = [&](const Subset& x, int t) {
    const Permutation& sigma = sigma_at(x, t);
    std::vector<UpperBoundVariant> variants;
    if (opts.upper_bound_strategy == UpperBoundStrategy::kBestOfBoth) {
      variants = {UpperBoundVariant::kFirst, UpperBoundVariant::kSecond};
    } else {
      variants = {t % 2 == 0 ? UpperBoundVariant::kFirst : UpperBoundVariant::kSecond};
    }
    std::vector<Subset> out;
    for (auto variant : variants) {
      const AffineModular surrogate = ModularUpperBound(*inst.f(), x, variant) -
                                      ModularLowerBound(*inst.g(), x, sigma);
      out.push_back(ModularMinimizeConstrained(surrogate, constraint));
      Subset largest = largest_minimizer(surrogate);
      if (!(largest == out.back())) out.push_back(std::move(largest));
    }
    return out;
  };
  // Element j at the chain boundary, crossed with both upper bounds. The
  // pair (m_1, j last inside x) is exact at x - j and (m_2, j first
  // outside) at x + j.
  auto sweep = [&](const Subset& x, int t, int k) -> std::optional<Subset> {
    const int j = k / 2;
    if (j >= n) return std::nullopt;
    const Permutation sigma = internal::MoveToBoundary(sigma_at(x, t), x, j);
    const bool inside = x.contains(j);
    const bool exact_first = k % 2 == 0;
    const UpperBoundVariant variant = (exact_first == inside) ? UpperBoundVariant::kFirst
                                                              : UpperBoundVariant::kSecond;
    return minimize_surrogate(x, sigma, variant);
  };
  return internal::RunDescent(inst, opts, constraint, "modmod", start, main_step, sweep);
}

}  // namespace dsmin
