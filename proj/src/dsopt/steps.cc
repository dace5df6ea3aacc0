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
#include <cmath>
#include <random>

#include "dsmin/dsopt.h"
#include "dsmin/errors.h"

namespace dsmin {

DSInstance::DSInstance(SetFunctionPtr f, SetFunctionPtr g)
    : f_(std::move(f)), g_(std::move(g)) {
  if (!f_ || !g_) throw DomainError("instance needs both f and g");
  if (f_->n() != g_->n()) throw DomainError("f and g must share a ground set");
  const Subset empty(f_->n());
  if (std::abs((*f_)(empty)) > kDefaultTolerance || std::abs((*g_)(empty)) > kDefaultTolerance) {
    throw PreconditionError("DS instance requires f(empty) = g(empty) = 0");
  }
  v_ = std::make_shared<DifferenceFunction>(f_, g_);
}

std::string ToString(Termination t) {
  switch (t) {
    case Termination::kConverged:
      return "converged";
    case Termination::kEpsilonStop:
      return "epsilon_stop";
    case Termination::kIterCap:
      return "iter_cap";
  }
  return "unknown";
}

std::string ToString(PermutationHeuristic h) {
  switch (h) {
    case PermutationHeuristic::kRandom:
      return "random";
    case PermutationHeuristic::kGGain:
      return "g_gain";
    case PermutationHeuristic::kVGain:
      return "v_gain";
  }
  return "unknown";
}

std::string ToString(UpperBoundStrategy s) {
  return s == UpperBoundStrategy::kBestOfBoth ? "best_of_both" : "alternate";
}

PermutationHeuristic ParseHeuristic(const std::string& s) {
  if (s == "random") return PermutationHeuristic::kRandom;
  if (s == "g_gain") return PermutationHeuristic::kGGain;
  if (s == "v_gain") return PermutationHeuristic::kVGain;
  throw ParseError("unknown permutation heuristic '" + s + "'");
}

UpperBoundStrategy ParseUpperBoundStrategy(const std::string& s) {
  if (s == "best_of_both") return UpperBoundStrategy::kBestOfBoth;
  if (s == "alternate") return UpperBoundStrategy::kAlternate;
  throw ParseError("unknown upper bound strategy '" + s + "'");
}

bool AcceptStep(double v_prev, double v_next, double epsilon) {
  if (epsilon < 0.0) throw DomainError("epsilon must be non-negative");
  if (v_prev < 0.0) return v_next <= v_prev * (1.0 + epsilon);
  if (v_prev == 0.0) return v_next < 0.0;
  return v_next <= v_prev - epsilon * std::abs(v_prev);
}

namespace {

bool LocallyOptimal(const SetFunction& v, const Subset& x, const Constraint* c, double tol) {
  const double base = v(x);
  for (int j = 0; j < v.n(); ++j) {
    const Subset neighbor = x.contains(j) ? x.Without(j) : x.With(j);
    if (c && !IsFeasible(*c, neighbor)) continue;
    if (v(neighbor) < base - tol) return false;
  }
  return true;
}

}  // namespace

bool LocalOptimalityCheck(const SetFunction& v, const Subset& x, double tol) {
  return LocallyOptimal(v, x, nullptr, tol);
}

bool LocalOptimalityCheck(const SetFunction& v, const Subset& x, const Constraint& c, double tol) {
  return LocallyOptimal(v, x, &c, tol);
}

Permutation ChoosePermutation(PermutationHeuristic heuristic, const Subset& x,
                              const SetFunction& scorer, std::uint64_t seed) {
  const int n = scorer.n();
  if (x.universe_size() != n) throw DomainError("subset does not match scorer");
  std::vector<int> inside = x.elements();
  std::vector<int> outside = x.Complement().elements();
  if (heuristic == PermutationHeuristic::kRandom) {
    std::mt19937_64 rng(seed);
    std::shuffle(inside.begin(), inside.end(), rng);
    std::shuffle(outside.begin(), outside.end(), rng);
  } else {
    const double fx = scorer(x);
    std::vector<double> gain(n);
    for (int j : inside) gain[j] = fx - scorer(x.Without(j));
    for (int j : outside) gain[j] = scorer(x.With(j)) - fx;
    auto by_gain = [&](int a, int b) { return gain[a] > gain[b]; };
    std::stable_sort(inside.begin(), inside.end(), by_gain);
    std::stable_sort(outside.begin(), outside.end(), by_gain);
  }
  inside.insert(inside.end(), outside.begin(), outside.end());
  return Permutation(std::move(inside));
}

}  // namespace dsmin
