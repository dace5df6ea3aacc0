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

#ifndef DSMIN_FUNCTIONS_H_
#define DSMIN_FUNCTIONS_H_

#include <vector>

#include "dsmin/set_function.h"

namespace dsmin {

// offset + sum_{j in X} w_j.
class ModularFunction : public SetFunction {
 public:
  explicit ModularFunction(std::vector<double> weights, double offset = 0.0);
  explicit ModularFunction(AffineModular m);
  const AffineModular& modular() const { return m_; }

 protected:
  double Evaluate(const Subset& x) const override { return m_(x); }

 private:
  AffineModular m_;
};

enum class ConcaveShape { kSqrt, kLog1p, kCap };

// phi(sum_{j in X} w_j) for non-negative w and a concave phi with phi(0) = 0.
// kCap is min(t, cap).
class ConcaveOfModular : public SetFunction {
 public:
  ConcaveOfModular(ConcaveShape shape, std::vector<double> weights, double cap = 0.0);

 protected:
  double Evaluate(const Subset& x) const override;
  void EvaluateChainImpl(std::span<const int> order, std::span<double> out) const override;

 private:
  double Apply(double t) const;

  ConcaveShape shape_;
  std::vector<double> weights_;
  double cap_;
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

// Total weight of edges with exactly one endpoint in X. Non-negative weights.
class GraphCut : public SetFunction {
 public:
  GraphCut(int n, std::vector<WeightedEdge> edges);

 protected:
  double Evaluate(const Subset& x) const override;

 private:
  std::vector<WeightedEdge> edges_;
};

// sum_i max_{j in X} benefits[i][j], 0 on the empty set. One row per client,
// one column per element; benefits must be non-negative.
class FacilityLocation : public SetFunction {
 public:
  explicit FacilityLocation(std::vector<std::vector<double>> benefits);

 protected:
  double Evaluate(const Subset& x) const override;

 private:
  std::vector<std::vector<double>> benefits_;
};

// Arbitrary function given by its 2^n values, indexed by bitmask. n <= 20.
class ExplicitTable : public SetFunction {
 public:
  ExplicitTable(int n, std::vector<double> values);
  const std::vector<double>& values() const { return values_; }

 protected:
  double Evaluate(const Subset& x) const override { return values_[x.mask()]; }

 private:
  std::vector<double> values_;
};

struct ScaledTerm {
  double coefficient = 1.0;
  SetFunctionPtr function;
};

// sum_k c_k f_k(X).
class ScaledSum : public SetFunction {
 public:
  explicit ScaledSum(std::vector<ScaledTerm> terms);

 protected:
  double Evaluate(const Subset& x) const override;
  void EvaluateChainImpl(std::span<const int> order, std::span<double> out) const override;

 private:
  std::vector<ScaledTerm> terms_;
};

// Tabulates f over all 2^n subsets (n <= 25).
std::vector<double> Tabulate(const SetFunction& f);

}  // namespace dsmin

#endif  // DSMIN_FUNCTIONS_H_
