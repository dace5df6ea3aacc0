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

#ifndef DSMIN_BOUNDS_H_
#define DSMIN_BOUNDS_H_

#include <functional>

#include "dsmin/permutation.h"
#include "dsmin/set_function.h"

namespace dsmin {

// Subgradient h_{Y,sigma} of a normalized submodular g: offset 0 and
// weights[sigma(i)] = g(S_i) - g(S_{i-1}). h <= g everywhere, with equality
// on every prefix of sigma's chain. Throws PreconditionError if the chain
// does not contain y or g(empty) != 0.
AffineModular ModularLowerBound(const SetFunction& g, const Subset& y, const Permutation& sigma);

enum class UpperBoundVariant { kFirst = 1, kSecond = 2 };

// Tight modular upper bounds of a submodular f at x. Both satisfy
// m(Y) >= f(Y) for all Y and m(x) = f(x).
//   kFirst:  weights f(j | x - j) inside x, f(j | empty) outside.
//   kSecond: weights f(j | V - j) inside x, f(j | x) outside.
// offset = f(x) - sum of the inside weights.
AffineModular ModularUpperBound(const SetFunction& f, const Subset& x, UpperBoundVariant variant);

// f' = f - k_f with k_f[j] = f(j | V - j). For submodular, normalized f,
// f' is a normalized, monotone non-decreasing polymatroid rank function.
struct NormalizedPart {
  SetFunctionPtr f_prime;
  std::vector<double> modular;  // k_f
};

NormalizedPart TotallyNormalize(const SetFunctionPtr& f);

// v = f - g rewritten as f' - g' + k with k[j] = v(j | V - j).
struct TotalNormalization {
  SetFunctionPtr f_prime;
  SetFunctionPtr g_prime;
  AffineModular k;
};

TotalNormalization TotallyNormalize(const SetFunctionPtr& f, const SetFunctionPtr& g);

// Returns min_X h(X) for a submodular h.
using SubmodularMinimizer = std::function<double(const SetFunction&)>;

struct MinimaLowerBounds {
  // min_X [f'(X) + k(X)] - g'(V)
  double bound1 = 0.0;
  // f'(empty) - g'(V) + sum_j min(k_j, 0)
  double bound2 = 0.0;
};

// Two lower bounds on min_X f(X) - g(X) for normalized submodular f, g.
MinimaLowerBounds ComputeMinimaLowerBounds(const SetFunctionPtr& f, const SetFunctionPtr& g,
                                           const SubmodularMinimizer& minimize);

// bound2 alone; needs no submodular minimization.
double ModularMinimaLowerBound(const SetFunctionPtr& f, const SetFunctionPtr& g);

}  // namespace dsmin

#endif  // DSMIN_BOUNDS_H_
