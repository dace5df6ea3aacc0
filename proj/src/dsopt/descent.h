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

#ifndef DSMIN_SRC_DSOPT_DESCENT_H_
#define DSMIN_SRC_DSOPT_DESCENT_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dsmin/dsopt.h"

namespace dsmin::internal {

// Candidates produced by one regular iteration t at the current set.
using MainStep = std::function<std::vector<Subset>(const Subset& x, int t)>;
// The k-th stall-sweep candidate at x, or nullopt once the sweep is exhausted.
using SweepStep = std::function<std::optional<Subset>(const Subset& x, int t, int k)>;

// Shared majorize/minimize loop: accept the best main-step candidate if it
// passes the step rule and strictly lowers v; otherwise walk the sweep until
// one does. With epsilon = 0 and no decrease available, moves to an
// unvisited candidate of equal value. Stops when nothing moves or max_iters
// steps were taken.
OptimizationTrace RunDescent(const DSInstance& inst, const SolverOptions& opts,
                             const Constraint& constraint, std::string algorithm,
                             const Subset& start, const MainStep& main_step,
                             const SweepStep& sweep);

// Deterministic per-(seed, a, b) stream seed.
// A step counts as a decrease only below this margin; smaller changes are
// treated as ties.
inline constexpr double kStrictDecrease = 1e-10;

std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

// f - m as a set function (m's offset dropped).
SetFunctionPtr MinusModular(const SetFunctionPtr& f, const AffineModular& m);

// Moves j to the boundary of the chain through x: last among the members
// of x if j is in x, first among the rest otherwise.
Permutation MoveToBoundary(const Permutation& sigma, const Subset& x, int j);

}  // namespace dsmin::internal

#endif  // DSMIN_SRC_DSOPT_DESCENT_H_
