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

#ifndef DSMIN_FEATSEL_H_
#define DSMIN_FEATSEL_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dsmin/dataset.h"
#include "dsmin/dsopt.h"

namespace dsmin {

using DatasetPtr = std::shared_ptr<const Dataset>;

// Entropies are in bits. Smoothing adds `alpha` to the count of every
// observed joint configuration and to one pooled cell standing for all
// unobserved configurations (present only when some configuration is
// unobserved). alpha = 0 gives the plug-in estimate.
double EmpiricalEntropy(const Dataset& ds, const Subset& a, double alpha);

enum class MiMode {
  kFactored,     // H(X_A | C) taken as sum_j H(X_j | C)
  kNonFactored,  // sum_c p(c) H(X_A | C = c), p(c) the class frequency
};

std::string ToString(MiMode mode);

double ConditionalEntropy(const Dataset& ds, const Subset& a, double alpha, MiMode mode);
// H(X_A) - H(X_A | C) under the chosen conditional form.
double MutualInformation(const Dataset& ds, const Subset& a, double alpha, MiMode mode);

// Set-function views over feature subsets. Chains are evaluated by
// refining row groups one feature at a time.
SetFunctionPtr EntropyOracle(DatasetPtr ds, double alpha);
SetFunctionPtr ConditionalEntropyOracle(DatasetPtr ds, double alpha, MiMode mode);

struct CostModel {
  enum class Kind { kModularCardinality, kPartitionSqrt };
  Kind kind = Kind::kModularCardinality;
  double lambda = 0.0;
  // kPartitionSqrt only: disjoint blocks covering the features, and
  // non-negative per-feature weights (empty means all ones).
  std::vector<std::vector<int>> blocks;
  std::vector<double> weights;

  static CostModel ModularCardinality(double lambda);
  static CostModel PartitionSqrt(std::vector<std::vector<int>> blocks, std::vector<double> weights,
                                 double lambda);
};

// Throws DomainError if blocks do not partition 0..n-1 or weights are
// negative or mis-sized.
void ValidateCostModel(const CostModel& cm, int n);
// lambda |A|, or lambda sum_i sqrt(m(A & S_i)).
double EvaluateCost(const CostModel& cm, const Subset& a);
SetFunctionPtr CostOracle(const CostModel& cm, int n);

// Minimize v(A) = [H(X_A | C) + cost(A)] - H(X_A), i.e. cost minus mutual
// information. All oracles are memoized and v(empty) = 0.
struct FeatSelObjective {
  DSInstance instance;
  MiMode mode;
  SetFunctionPtr entropy;
  SetFunctionPtr conditional;
  SetFunctionPtr cost;
};

FeatSelObjective BuildObjective(DatasetPtr ds, const CostModel& cost, double alpha, MiMode mode);

enum class GreedyMode { kGrF, kGrNF };

struct GreedySelection {
  Subset selected;
  std::vector<int> order;     // features in the order they were added
  std::vector<double> values;  // objective after each addition, values[0] = 0
};

// Adds the feature with the largest strict decrease of the (factored for
// GrF, non-factored for GrNF) objective until the budget is used or no
// feature helps. Ties go to the lower index.
GreedySelection GreedySelect(DatasetPtr ds, const CostModel& cost, GreedyMode mode,
                             std::optional<int> budget, double alpha);

// Categorical naive Bayes with Laplace pseudo-count alpha, scored by
// stratified k-fold cross-validation. Rows of each class are shuffled with
// `seed` and dealt round-robin to folds. Returns the mean fold accuracy.
// An empty feature set predicts from the class prior alone.
double NaiveBayesCV(const Dataset& ds, const Subset& a, int folds, double alpha,
                    std::uint64_t seed = 0);

}  // namespace dsmin

#endif  // DSMIN_FEATSEL_H_
