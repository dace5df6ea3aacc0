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

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "dsmin/errors.h"
#include "dsmin/functions.h"
#include "dsmin/sfm.h"

namespace dsmin::internal {

std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer applied to a simple combination.
  std::uint64_t z = seed ^ (a * 0x9E3779B97F4A7C15ULL) ^ (b * 0xC2B2AE3D27D4EB4FULL);
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SetFunctionPtr MinusModular(const SetFunctionPtr& f, const AffineModular& m) {
  std::vector<double> neg(m.weights.size());
  for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -m.weights[j];
  return std::make_shared<ScaledSum>(std::vector<ScaledTerm>{
      {1.0, f}, {1.0, std::make_shared<ModularFunction>(std::move(neg))}});
}

Permutation MoveToBoundary(const Permutation& sigma, const Subset& x, int j) {
  std::vector<int> order = sigma.order();
  const int boundary = x.contains(j) ? x.size() - 1 : x.size();
  auto it = std::find(order.begin(), order.end(), j);
  order.erase(it);
  order.insert(order.begin() + boundary, j);
  return Permutation(std::move(order));
}

OptimizationTrace RunDescent(const DSInstance& inst, const SolverOptions& opts,
                             const Constraint& constraint, std::string algorithm,
                             const Subset& start, const MainStep& main_step,
                             const SweepStep& sweep) {
  if (opts.epsilon < 0.0) throw DomainError("epsilon must be non-negative");
  if (opts.max_iters < 0) throw DomainError("max_iters must be non-negative");
  const auto clock_start = std::chrono::steady_clock::now();
  const std::int64_t calls_start = inst.oracle_calls();

  OptimizationTrace trace;
  trace.algorithm = std::move(algorithm);
  trace.options = opts;
  trace.constraint = constraint.kind();

  auto record = [&](const Subset& x, double value) {
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - clock_start;
    trace.iterates.push_back({x, value, inst.oracle_calls() - calls_start, elapsed.count()});
  };

  try {
    Subset x = start;
    double vx = inst(x);
    record(x, vx);
    // Sets visited since the last strict decrease; plateau moves never
    // revisit one, so the loop terminates.
    std::unordered_set<Subset, SubsetHash> plateau{x};
    bool blocked = false;
    std::optional<std::pair<Subset, double>> tie;
    auto take = [&](const Subset& y, double vy) {
      x = y;
      vx = vy;
      record(x, vx);
    };
    // Accepts a feasible y if it is strictly better and passes the step
    // rule; otherwise remembers the first unvisited equal-valued set.
    auto offer = [&](const Subset& y, double vy) {
      if (vy < vx - kStrictDecrease) {
        if (AcceptStep(vx, vy, opts.epsilon)) {
          take(y, vy);
          plateau = {x};
          return true;
        }
        blocked = true;
      } else if (opts.epsilon == 0.0 && !tie && vy <= vx + kStrictDecrease &&
                 !plateau.contains(y)) {
        tie.emplace(y, vy);
      }
      return false;
    };

    for (int t = 0;; ++t) {
      if (trace.accepted_steps() >= opts.max_iters) {
        trace.termination = Termination::kIterCap;
        break;
      }
      blocked = false;
      tie.reset();
      std::vector<std::pair<Subset, double>> candidates;
      for (const Subset& y : main_step(x, t)) {
        if (IsFeasible(constraint, y)) candidates.emplace_back(y, inst(y));
      }
      // Best main-step candidate first, then the rest only as plateau moves.
      std::stable_sort(candidates.begin(), candidates.end(),
                       [](const auto& a, const auto& b) { return a.second < b.second; });
      bool accepted = false;
      for (const auto& [y, vy] : candidates) {
        if (offer(y, vy)) {
          accepted = true;
          break;
        }
      }
      for (int k = 0; !accepted; ++k) {
        const std::optional<Subset> y = sweep(x, t, k);
        if (!y) break;
        if (IsFeasible(constraint, *y)) accepted = offer(*y, inst(*y));
      }
      if (accepted) continue;
      // With epsilon = 0 the loop continues while the iterate changes,
      // walking across sets of equal value.
      if (tie) {
        take(tie->first, tie->second);
        plateau.insert(x);
        continue;
      }
      trace.termination = blocked ? Termination::kEpsilonStop : Termination::kConverged;
      break;
    }
    trace.locally_optimal = LocalOptimalityCheck(*inst.v(), x, constraint);
  } catch (const SfmConvergenceError& e) {
    throw SolverError(std::string("inner minimizer failed: ") + e.what(), std::move(trace));
  } catch (const TooLargeError& e) {
    throw SolverError(std::string("inner solver refused the problem: ") + e.what(),
                      std::move(trace));
  }
  return trace;
}

}  // namespace dsmin::internal
