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

#include "dsmin/decomposition.h"

#include <cmath>
#include <limits>

#include "dsmin/errors.h"
#include "dsmin/exhaustive.h"
#include "dsmin/functions.h"

namespace dsmin {

double SqrtGainDropMargin(int n) {
  if (n < 2) throw DomainError("gain-drop margin of sqrt(|X|) needs n >= 2");
  return 2.0 * std::sqrt(n - 1.0) - std::sqrt(static_cast<double>(n)) - std::sqrt(n - 2.0);
}

DsDecomposition DsDecompose(const SetFunctionPtr& v, std::optional<double> alpha_lower_bound) {
  const int n = v->n();
  std::optional<double> exact;
  if (!alpha_lower_bound || n <= kMaxSubmodularCheckN) exact = SubmodularityMargin(*v);
  if (exact && alpha_lower_bound && *alpha_lower_bound > *exact + kDefaultTolerance) {
    throw DomainError("supplied alpha lower bound exceeds the exact margin");
  }
  double alpha = exact ? *exact : *alpha_lower_bound;
  if (alpha_lower_bound) alpha = std::min(alpha, *alpha_lower_bound);

  DsDecomposition d;
  d.alpha = alpha;
  if (n >= 2) d.beta = SqrtGainDropMargin(n);
  if (alpha >= 0.0 || n < 2) {
    d.f = v;
    d.g = std::make_shared<ModularFunction>(std::vector<double>(n, 0.0));
    d.scale = 0.0;
    return d;
  }
  d.scale = std::abs(alpha) / d.beta;
  auto root = std::make_shared<ConcaveOfModular>(ConcaveShape::kSqrt, std::vector<double>(n, 1.0));
  d.f = std::make_shared<ScaledSum>(std::vector<ScaledTerm>{{1.0, v}, {d.scale, root}});
  d.g = std::make_shared<ScaledSum>(std::vector<ScaledTerm>{{d.scale, root}});
  return d;
}

InstanceSpec DecompositionInstance(const SetFunction& v, const DsDecomposition& d) {
  const int n = v.n();
  if (n > 20) throw TooLargeError("decomposition instances are tabulated; n <= 20");
  FunctionSpec table{ExplicitTableSpec{n, Tabulate(v)}};
  if (d.scale == 0.0) {
    return {table, FunctionSpec{ModularSpec{std::vector<double>(n, 0.0)}}};
  }
  FunctionSpec root{ConcaveOfModularSpec{ConcaveShape::kSqrt, std::vector<double>(n, 1.0)}};
  return {FunctionSpec{ScaledSumSpec{{1.0, d.scale}, {table, root}}},
          FunctionSpec{ScaledSumSpec{{d.scale}, {root}}}};
}

}  // namespace dsmin
