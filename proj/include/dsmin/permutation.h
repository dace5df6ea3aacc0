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

#ifndef DSMIN_PERMUTATION_H_
#define DSMIN_PERMUTATION_H_

#include <vector>

#include "dsmin/subset.h"

namespace dsmin {

// An ordering of the ground set. Its chain is the sequence of prefix sets
// S_i = {order[0], ..., order[i-1]}.
class Permutation {
 public:
  // Throws DomainError unless `order` is a bijection on 0..n-1.
  explicit Permutation(std::vector<int> order);
  static Permutation Identity(int n);

  int n() const { return static_cast<int>(order_.size()); }
  int operator[](int i) const { return order_[i]; }
  const std::vector<int>& order() const { return order_; }

  Subset Prefix(int i) const;
  // True when the first |y| entries are exactly the elements of y.
  bool ChainContains(const Subset& y) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> order_;
};

}  // namespace dsmin

#endif  // DSMIN_PERMUTATION_H_
