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

#ifndef DSMIN_SRC_FEATSEL_ROW_GROUPS_H_
#define DSMIN_SRC_FEATSEL_ROW_GROUPS_H_

#include <vector>

#include "dsmin/dataset.h"

namespace dsmin::internal {

// Rows partitioned by their joint configuration on the features refined so
// far. Starts with every row in one group.
class RowGroups {
 public:
  explicit RowGroups(const Dataset& ds);

  void Refine(int feature);

  int groups() const { return groups_; }
  const std::vector<int>& ids() const { return ids_; }
  // Number of possible joint configurations, saturating at 1e300.
  double cells() const { return cells_; }

  // H(X_A) for the refined set A, in bits.
  double Entropy(double alpha) const;
  // sum_c p(c) H(X_A | C = c).
  double ConditionalEntropy(double alpha) const;

 private:
  const Dataset* ds_;
  std::vector<int> ids_;
  int groups_ = 1;
  double cells_ = 1.0;
};

// Smoothed entropy of a histogram holding only its non-zero counts, with
// `cells` possible outcomes in total.
double SmoothedEntropy(const std::vector<int>& counts, double total, double cells, double alpha);

}  // namespace dsmin::internal

#endif  // DSMIN_SRC_FEATSEL_ROW_GROUPS_H_
