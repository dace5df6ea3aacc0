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
#include <numeric>

#include "dsmin/errors.h"
#include "dsmin/sfm.h"

namespace dsmin {

BaseVertex BaseVertexFromOrder(const SetFunction& f, std::vector<int> order) {
  const int n = f.n();
  if (static_cast<int>(order.size()) != n) throw DomainError("order must list every element");
  BaseVertex v;
  v.chain.resize(n + 1);
  f.EvaluateChain(order, v.chain);
  v.coords.assign(n, 0.0);
  for (int i = 0; i < n; ++i) v.coords[order[i]] = v.chain[i + 1] - v.chain[i];
  v.order = std::move(order);
  return v;
}

BaseVertex GreedyBaseVertex(const SetFunction& f, std::span<const double> direction) {
  const int n = f.n();
  if (static_cast<int>(direction.size()) != n) throw DomainError("direction has wrong length");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return direction[a] < direction[b]; });
  return BaseVertexFromOrder(f, std::move(order));
}

}  // namespace dsmin
