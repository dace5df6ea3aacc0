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

#ifndef DSMIN_DSOPT_H_
#define DSMIN_DSOPT_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsmin/constraint.h"
#include "dsmin/permutation.h"
#include "dsmin/set_function.h"
#include "dsmin/sfmax.h"

namespace dsmin {

// Minimize v(X) = f(X) - g(X) with f, g submodular and normalized.
class DSInstance {
 public:
  // Throws DomainError on mismatched ground sets and PreconditionError
  // unless f(empty) = g(empty) = 0.
  DSInstance(SetFunctionPtr f, SetFunctionPtr g);

  int n() const { return f_->n(); }
  const SetFunctionPtr& f() const { return f_; }
  const SetFunctionPtr& g() const { return g_; }
  const SetFunctionPtr& v() const { return v_; }
  double operator()(const Subset& x) const { return (*v_)(x); }
  // Calls made on f plus calls made on g.
  std::int64_t oracle_calls() const { return f_->call_count() + g_->call_count(); }

 private:
  SetFunctionPtr f_;
  SetFunctionPtr g_;
  SetFunctionPtr v_;
};

enum class PermutationHeuristic { kRandom, kGGain, kVGain };
enum class UpperBoundStrategy { kBestOfBoth, kAlternate };
enum class InnerSolver { kDefault, kBruteForce };

struct SolverOptions {
  double epsilon = 0.0;
  int max_iters = 1000;
  PermutationHeuristic heuristic = PermutationHeuristic::kGGain;
  UpperBoundStrategy upper_bound_strategy = UpperBoundStrategy::kBestOfBoth;
  std::uint64_t seed = 0;
  // kDefault: min-norm point for SubSup, double greedy for SupSub.
  InnerSolver inner = InnerSolver::kDefault;
  DoubleGreedyMode double_greedy_mode = DoubleGreedyMode::kDeterministic;
};

enum class Termination { kConverged, kEpsilonStop, kIterCap };

std::string ToString(Termination t);
std::string ToString(PermutationHeuristic h);
std::string ToString(UpperBoundStrategy s);
PermutationHeuristic ParseHeuristic(const std::string& s);  // throws ParseError
UpperBoundStrategy ParseUpperBoundStrategy(const std::string& s);

struct TraceIterate {
  Subset set;
  double value = 0.0;
  std::int64_t oracle_calls = 0;  // since the start of the run
  double millis = 0.0;            // since the start of the run
};

struct OptimizationTrace {
  std::string algorithm;
  SolverOptions options;
  std::string constraint = "none";
  // iterates[0] is the starting set; every later entry is an accepted step.
  std::vector<TraceIterate> iterates;
  Termination termination = Termination::kConverged;
  // No single feasible addition or deletion lowers v (tolerance 1e-9).
  bool locally_optimal = false;

  const TraceIterate& final_iterate() const { return iterates.back(); }
  int accepted_steps() const { return static_cast<int>(iterates.size()) - 1; }
};

// Raised when an inner solver fails; carries the iterates accepted so far.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, OptimizationTrace partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const OptimizationTrace& partial_trace() const { return partial_; }

 private:
  OptimizationTrace partial_;
};

// The epsilon step rule. Negative v_prev: v_next <= v_prev (1 + eps).
// Zero: v_next < 0. Positive: v_next <= v_prev - eps |v_prev|.
bool AcceptStep(double v_prev, double v_next, double epsilon);

// True iff no single addition or deletion lowers v by more than tol.
bool LocalOptimalityCheck(const SetFunction& v, const Subset& x,
                          double tol = kDefaultTolerance);
// Same, restricted to neighbors satisfying the constraint.
bool LocalOptimalityCheck(const SetFunction& v, const Subset& x, const Constraint& c,
                          double tol = kDefaultTolerance);

// A permutation whose chain passes through x. Gain heuristics order the
// members of x by decreasing scorer(j | x - j) and the rest by decreasing
// scorer(j | x), ties to the lower index; kRandom shuffles both segments.
Permutation ChoosePermutation(PermutationHeuristic heuristic, const Subset& x,
                              const SetFunction& scorer, std::uint64_t seed);

OptimizationTrace SubSup(const DSInstance& inst, const SolverOptions& opts);
// Constraint must be none or card_le.
OptimizationTrace SupSub(const DSInstance& inst, const SolverOptions& opts,
                         const Constraint& constraint = {});
OptimizationTrace ModMod(const DSInstance& inst, const SolverOptions& opts,
                         const Constraint& constraint = {});

}  // namespace dsmin

#endif  // DSMIN_DSOPT_H_
