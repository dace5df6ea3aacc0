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

#ifndef DSMIN_DECOMPOSITION_H_
#define DSMIN_DECOMPOSITION_H_

#include <optional>

#include "dsmin/function_spec.h"
#include "dsmin/set_function.h"

namespace dsmin {

// v = f - g with f = v + scale * sqrt(|X|) and g = scale * sqrt(|X|).
struct DsDecomposition {
  SetFunctionPtr f;
  SetFunctionPtr g;
  double alpha = 0.0;  // the (possibly lower-bounded) submodularity margin used
  double beta = 0.0;   // margin of sqrt(|X|) on n elements
  double scale = 0.0;  // |alpha| / beta, 0 when v is already submodular
};

// 2 sqrt(n-1) - sqrt(n) - sqrt(n-2): the smallest drop in gains of
// sqrt(|X|) between nested contexts. Requires n >= 2.
double SqrtGainDropMargin(int n);

// Splits an arbitrary set function into a difference of submodular
// functions. Without a lower bound the margin alpha is computed exactly
// (n <= 16). A supplied lower bound is checked against the exact margin
// when n <= 16 and rejected with DomainError if it exceeds it.
DsDecomposition DsDecompose(const SetFunctionPtr& v,
                            std::optional<double> alpha_lower_bound = std::nullopt);

// Instance file for a decomposition: f = table(v) + scale * sqrt(|X|),
// g = scale * sqrt(|X|). Requires n <= 20.
InstanceSpec DecompositionInstance(const SetFunction& v, const DsDecomposition& d);

}  // namespace dsmin

#endif  // DSMIN_DECOMPOSITION_H_
