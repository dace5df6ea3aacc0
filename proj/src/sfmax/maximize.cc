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

#include <algorithm>
#include <random>
#include <string>

#include "dsmin/errors.h"
#include "dsmin/sfmax.h"

namespace dsmin {
namespace {

// Local search ignores improvements below this to guarantee termination
// under floating-point noise.
constexpr double kMinImprovement = 1e-12;

}  // namespace

MaximizerResult DoubleGreedy(const SetFunction& f, DoubleGreedyMode mode, std::uint64_t seed) {
  const int n = f.n();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Subset lower(n);
  Subset upper = Subset::Full(n);
  double final_value = 0.0;
  for (int j = 0; j < n; ++j) {
    const Subset grown = lower.With(j);
    const Subset shrunk = upper.Without(j);
    const double f_grown = f(grown);
    const double f_lower = f(lower);
    const double f_shrunk = f(shrunk);
    const double f_upper = f(upper);
    const double a = f_grown - f_lower;
    const double b = f_shrunk - f_upper;
    bool add;
    if (mode == DoubleGreedyMode::kDeterministic) {
      add = a >= b;
    } else {
      const double ap = std::max(a, 0.0);
      const double bp = std::max(b, 0.0);
      add = (ap + bp == 0.0) ? true : unit(rng) < ap / (ap + bp);
    }
    if (add) {
      lower = grown;
      final_value = f_grown;
    } else {
      upper = shrunk;
      final_value = f_shrunk;
    }
  }
  MaximizerResult r{lower, final_value,
                    mode == DoubleGreedyMode::kDeterministic ? "double_greedy"
                                                             : "randomized_double_greedy",
                    std::nullopt};
  if (mode == DoubleGreedyMode::kRandomized) r.seed = seed;
  return r;
}

MaximizerResult GreedyCardinalityMax(const SetFunction& f, int k) {
  const int n = f.n();
  if (k < 0 || k > n) throw DomainError("cardinality budget must lie in 0..n");
  Subset current(n);
  double value = f(current);
  for (int step = 0; step < k; ++step) {
    int best = -1;
    double best_value = value;
    for (int j = 0; j < n; ++j) {
      if (current.contains(j)) continue;
      const double candidate = f(current.With(j));
      if (candidate > best_value + kMinImprovement &&
          (best < 0 || candidate > best_value)) {
        best = j;
        best_value = candidate;
      }
    }
    if (best < 0) break;
    current.insert(best);
    value = best_value;
  }
  return {current, value, "greedy_cardinality", std::nullopt};
}

MaximizerResult LocalSearchMax(const SetFunction& f, const Subset& start,
                               std::optional<int> max_size) {
  const int n = f.n();
  Subset current = start;
  double value = f(current);
  for (;;) {
    int best = -1;
    double best_value = value + kMinImprovement;
    for (int j = 0; j < n; ++j) {
      const bool inside = current.contains(j);
      if (!inside && max_size && current.size() + 1 > *max_size) continue;
      const double candidate = f(inside ? current.Without(j) : current.With(j));
      if (candidate > best_value) {
        best = j;
        best_value = candidate;
      }
    }
    if (best < 0) break;
    if (current.contains(best)) {
      current.erase(best);
    } else {
      current.insert(best);
    }
    value = best_value;
  }
  return {current, value, "local_search", std::nullopt};
}

bool IsLocalMaximum(const SetFunction& f, const Subset& x, double tol) {
  const double base = f(x);
  for (int j = 0; j < f.n(); ++j) {
    const double neighbor = f(x.contains(j) ? x.Without(j) : x.With(j));
    if (neighbor > base + tol) return false;
  }
  return true;
}

}  // namespace dsmin
