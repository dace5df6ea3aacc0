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

#ifndef DSMIN_EXPERIMENT_H_
#define DSMIN_EXPERIMENT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "dsmin/featsel.h"
#include "json.hpp"

namespace dsmin {

// Method names in output order.
inline const std::vector<std::string>& AllFeatselMethods() {
  static const std::vector<std::string> kMethods = {"grf", "grnf", "subsup", "supsub", "modmod"};
  return kMethods;
}

// Comma-separated method list; "all" expands to every method. Output keeps
// the canonical order. Throws ParseError on unknown names.
std::vector<std::string> ParseMethods(const std::string& text);

// Lambda grid for the cost lambda * |A|: the value at which non-factored
// greedy stops after exactly sizes[i] features. The greedy order does not
// depend on lambda for this cost, so one run at lambda = 0 fixes every
// stopping point. A size that no lambda produces maps to the nearest
// larger reachable size. Sizes must be positive.
std::vector<double> LambdaGridForSizes(DatasetPtr ds, const std::vector<int>& sizes, double alpha);

struct ExperimentConfig {
  std::vector<double> lambdas;
  std::vector<std::string> methods = AllFeatselMethods();
  CostModel cost;  // lambda is replaced by each grid value
  double alpha = 1.0;
  int folds = 10;
  std::uint64_t seed = 0;
  SolverOptions solver;
  int threads = 0;  // 0: hardware concurrency
};

struct ExperimentRow {
  double lambda = 0.0;
  std::string method;
  Subset selected;
  // Cost minus non-factored mutual information, for every method.
  double objective = 0.0;
  double mutual_information = 0.0;
  double cost = 0.0;
  double accuracy = 0.0;
  int iterations = 0;
};

// One row per (lambda, method), sorted by lambda then method. Greedy
// methods add features without a budget; the DS solvers minimize the
// non-factored objective from the empty set.
std::vector<ExperimentRow> RunFeatselExperiment(DatasetPtr ds, const ExperimentConfig& config);

// Header "lambda,method,num_selected,objective,mutual_information,cost,accuracy,iterations,selected_features";
// selected features are 1-based and space separated.
std::string ExperimentCsv(const std::vector<ExperimentRow>& rows);
nlohmann::json ExperimentJson(const std::vector<ExperimentRow>& rows);

}  // namespace dsmin

#endif  // DSMIN_EXPERIMENT_H_
