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
#include "dsmin/sfm.h"

namespace dsmin {

OptimizationTrace SubSup(const DSInstance& inst, const SolverOptions& opts) {
  const int n = inst.n();
  auto scorer_for = [&](PermutationHeuristic h) -> const SetFunction& {
    return h == PermutationHeuristic::kVGain ? *inst.v() : *inst.g();
  };
  // argmin_Y f(Y) - h_{x,sigma}(Y), exactly up to the SFM tolerance.
  auto minimize_surrogate = [&](const Subset& x, const Permutation& sigma) {
    const AffineModular h = ModularLowerBound(*inst.g(), x, sigma);
    const SetFunctionPtr surrogate = internal::MinusModular(inst.f(), h);
    if (opts.inner == InnerSolver::kBruteForce) return BruteForceSfm(*surrogate).minimizer;
    return MinNormPoint(*surrogate).minimizer;
  };

  std::vector<PermutationHeuristic> extra;
  for (auto h : {PermutationHeuristic::kGGain, PermutationHeuristic::kVGain}) {
    if (h != opts.heuristic) extra.push_back(h);
  }

  auto main_step = [&](const Subset& x, int t) {
    const Permutation sigma = ChoosePermutation(opts.heuristic, x, scorer_for(opts.heuristic),
                                                internal::MixSeed(opts.seed, t, 0));
    return std::vector<Subset>{minimize_surrogate(x, sigma)};
  };
  // The gain orderings not already used, then one seeded permutation per
  // improving flip with that element at the chain boundary. Such a chain
  // makes h exact at x +- j, so the surrogate minimum beats v(x). Flips
  // that do not improve v are skipped, which keeps a stalled run at 2n
  // oracle calls instead of n SFM solves.
  Subset flips_at(n);
  int flips_t = -1;
  std::vector<int> flips;
  auto sweep = [&](const Subset& x, int t, int k) -> std::optional<Subset> {
    if (k < static_cast<int>(extra.size())) {
      return minimize_surrogate(x, ChoosePermutation(extra[k], x, scorer_for(extra[k]), 0));
    }
    if (t != flips_t || !(x == flips_at)) {
      flips.clear();
      const double vx = inst(x);
      for (int j = 0; j < n; ++j) {
        Subset y = x;
        if (y.contains(j)) {
          y.erase(j);
        } else {
          y.insert(j);
        }
        if (inst(y) < vx - internal::kStrictDecrease) flips.push_back(j);
      }
      flips_t = t;
      flips_at = x;
    }
    const int i = k - static_cast<int>(extra.size());
    if (i >= static_cast<int>(flips.size())) return std::nullopt;
    const int j = flips[i];
    const Permutation base = ChoosePermutation(PermutationHeuristic::kRandom, x, *inst.g(),
                                               internal::MixSeed(opts.seed, t, 1 + j));
    return minimize_surrogate(x, internal::MoveToBoundary(base, x, j));
  };
  return internal::RunDescent(inst, opts, Constraint{}, "subsup", Subset(n), main_step, sweep);
}

}  // namespace dsmin
