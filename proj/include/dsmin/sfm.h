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

#ifndef DSMIN_SFM_H_
#define DSMIN_SFM_H_

#include <span>
#include <stdexcept>
#include <vector>

#include "dsmin/set_function.h"

namespace dsmin {

// A vertex of the base polytope B_f generated by the greedy algorithm.
struct BaseVertex {
  std::vector<double> coords;  // indexed by element
  std::vector<int> order;      // generating permutation
  std::vector<double> chain;   // f of each prefix of `order`, chain[0] = f(empty)
};

// Telescoped gains along `order`: coords[order[i]] = f(S_{i+1}) - f(S_i).
BaseVertex BaseVertexFromOrder(const SetFunction& f, std::vector<int> order);

// argmin over x in B_f of <direction, x>. Elements are visited in ascending
// order of direction (ties by index), so the most negative direction
// entries receive the earliest, largest gains.
BaseVertex GreedyBaseVertex(const SetFunction& f, std::span<const double> direction);

struct MinNormOptions {
  double tol = 1e-10;
  int max_major_cycles = 0;  // 0 means 100 n^2
};

struct SfmResult {
  Subset minimizer;
  double value = 0.0;
  std::vector<double> point;  // (approximate) minimum-norm point of B_f
  double dual_bound = 0.0;    // sum_j min(point_j, 0) <= min f
  double gap = 0.0;           // value - dual_bound
  int major_cycles = 0;
};

class SfmConvergenceError : public std::runtime_error {
 public:
  SfmConvergenceError(const std::string& what, SfmResult best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const SfmResult& best_so_far() const { return best_; }

 private:
  SfmResult best_;
};

// Exact minimization of a normalized submodular function with the
// Fujishige-Wolfe minimum-norm-point algorithm. The returned set is the
// smallest-cardinality minimizing level set of the final point, which for
// the exact min-norm point is {j : x_j < 0}, the minimal minimizer.
//
// Throws PreconditionError if f(empty) != 0 and SfmConvergenceError if the
// major-cycle cap is hit.
SfmResult MinNormPoint(const SetFunction& f, const MinNormOptions& options = {});

// Same contract as MinNormPoint, by enumeration (n <= 25).
SfmResult BruteForceSfm(const SetFunction& f);

}  // namespace dsmin

#endif  // DSMIN_SFM_H_
