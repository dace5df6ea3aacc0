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

#include "dsmin/permutation.h"

#include <numeric>

#include "dsmin/errors.h"

namespace dsmin {

Permutation::Permutation(std::vector<int> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (int j : order_) {
    if (j < 0 || j >= n() || seen[j]) throw DomainError("permutation is not a bijection");
    seen[j] = true;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return Permutation(std::move(order));
}

Subset Permutation::Prefix(int i) const {
  Subset s(n());
  for (int k = 0; k < i; ++k) s.insert(order_[k]);
  return s;
}

bool Permutation::ChainContains(const Subset& y) const {
  if (y.universe_size() != n()) return false;
  const int k = y.size();
  for (int i = 0; i < k; ++i) {
    if (!y.contains(order_[i])) return false;
  }
  return true;
}

}  // namespace dsmin
