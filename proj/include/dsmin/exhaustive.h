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

#ifndef DSMIN_EXHAUSTIVE_H_
#define DSMIN_EXHAUSTIVE_H_

#include <optional>
#include <vector>

#include "dsmin/set_function.h"

namespace dsmin {

inline constexpr int kMaxBruteForceN = 25;
inline constexpr int kMaxSubmodularCheckN = 16;

struct SetValue {
  Subset set;
  double value = 0.0;
};

// Global minimizer by enumeration. Ties within `tol` go to the smaller set
// in canonical order (cardinality, then lexicographic). Throws TooLargeError
// for n > 25.
SetValue BruteForceMinimize(const SetFunction& f, double tol = kDefaultTolerance);

// Global maximizer by enumeration, optionally over sets of size <= max_size.
SetValue BruteForceMaximize(const SetFunction& f, std::optional<int> max_size = std::nullopt,
                            double tol = kDefaultTolerance);

// min over j and X strictly inside Y, Y a subset of V - j, of
// f(j|X) - f(j|Y). Non-negative exactly when f is submodular; +infinity when
// no such triple exists (n = 1). Computed from the full table with
// subset-minimum sweeps in O(n^2 2^n). Throws TooLargeError for n > 16.
double SubmodularityMargin(const SetFunction& f);
double SubmodularityMargin(int n, const std::vector<double>& table);

// Diminishing-returns check with absolute tolerance. n <= 16.
bool CheckSubmodular(const SetFunction& f, double tol = kDefaultTolerance);

}  // namespace dsmin

#endif  // DSMIN_EXHAUSTIVE_H_
