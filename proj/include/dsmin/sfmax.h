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

#ifndef DSMIN_SFMAX_H_
#define DSMIN_SFMAX_H_

#include <cstdint>
#include <optional>
#include <string>

#include "dsmin/set_function.h"

namespace dsmin {

struct MaximizerResult {
  Subset set;
  double value = 0.0;  // f(set), taken from an oracle evaluation of `set`
  std::string method;
  std::optional<std::uint64_t> seed;
};

enum class DoubleGreedyMode { kDeterministic, kRandomized };

// Bi-directional greedy for unconstrained submodular maximization. One pass
// in index order keeps A subset of B; for element j compare
// a = f(A + j) - f(A) with b = f(B - j) - f(B). Deterministic: add iff
// a >= b. Randomized: add with probability max(a,0) / (max(a,0) + max(b,0)),
// adding when both are zero. Exactly 4n oracle calls.
MaximizerResult DoubleGreedy(const SetFunction& f, DoubleGreedyMode mode,
                             std::uint64_t seed = 0);

// Adds the best strictly positive-gain element k times (ties to the lowest
// index), stopping early when nothing improves.
MaximizerResult GreedyCardinalityMax(const SetFunction& f, int k);

// Best single add/delete while f strictly increases. With max_size set,
// additions that would exceed it are skipped.
MaximizerResult LocalSearchMax(const SetFunction& f, const Subset& start,
                               std::optional<int> max_size = std::nullopt);

// True when no single addition or deletion increases f by more than tol.
bool IsLocalMaximum(const SetFunction& f, const Subset& x, double tol = kDefaultTolerance);

}  // namespace dsmin

#endif  // DSMIN_SFMAX_H_
