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

#ifndef DSMIN_SET_FUNCTION_H_
#define DSMIN_SET_FUNCTION_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "dsmin/subset.h"

namespace dsmin {

// Absolute tolerance for every ">=" / "<=" comparison between set-function
// values unless a caller overrides it.
inline constexpr double kDefaultTolerance = 1e-9;

// A deterministic map from subsets of {0..n-1} to reals.
//
// Every evaluation through operator() or EvaluateChain() is counted. The
// counter is the only mutable state and is atomic, so one oracle may be
// shared across threads.
class SetFunction {
 public:
  explicit SetFunction(int n);
  virtual ~SetFunction() = default;
  SetFunction(const SetFunction&) = delete;
  SetFunction& operator=(const SetFunction&) = delete;

  int n() const { return n_; }

  double operator()(const Subset& x) const;

  // Values of every prefix of `order`: out[i] = f({order[0..i-1]}), so
  // out.size() must be order.size() + 1. Counts order.size() + 1 calls.
  // Subclasses may override with an incremental evaluation.
  void EvaluateChain(std::span<const int> order, std::span<double> out) const;

  std::int64_t call_count() const { return calls_.load(std::memory_order_relaxed); }
  void ResetCallCount() const { calls_.store(0, std::memory_order_relaxed); }

 protected:
  virtual double Evaluate(const Subset& x) const = 0;
  virtual void EvaluateChainImpl(std::span<const int> order, std::span<double> out) const;

 private:
  int n_;
  mutable std::atomic<std::int64_t> calls_{0};
};

using SetFunctionPtr = std::shared_ptr<const SetFunction>;

// f(j | X) = f(X + j) - f(X). Returns 0 without evaluating when j is in X.
double Gain(const SetFunction& f, int j, const Subset& x);

// offset + sum of weights over the set. Represents both subgradient lower
// bounds (offset 0) and the modular upper bounds.
struct AffineModular {
  double offset = 0.0;
  std::vector<double> weights;

  int n() const { return static_cast<int>(weights.size()); }
  double operator()(const Subset& x) const;
};

AffineModular operator-(const AffineModular& a, const AffineModular& b);

// Wraps an arbitrary callable. Mostly for tests and derived surrogates.
class LambdaFunction : public SetFunction {
 public:
  LambdaFunction(int n, std::function<double(const Subset&)> fn)
      : SetFunction(n), fn_(std::move(fn)) {}

 protected:
  double Evaluate(const Subset& x) const override { return fn_(x); }

 private:
  std::function<double(const Subset&)> fn_;
};

// v(X) = f(X) - g(X).
class DifferenceFunction : public SetFunction {
 public:
  DifferenceFunction(SetFunctionPtr f, SetFunctionPtr g);

  const SetFunctionPtr& f() const { return f_; }
  const SetFunctionPtr& g() const { return g_; }

 protected:
  double Evaluate(const Subset& x) const override;
  void EvaluateChainImpl(std::span<const int> order, std::span<double> out) const override;

 private:
  SetFunctionPtr f_;
  SetFunctionPtr g_;
};

// f(X) - f(empty). The empty-set value is read once at construction.
class NormalizedFunction : public SetFunction {
 public:
  explicit NormalizedFunction(SetFunctionPtr inner);
  double empty_value() const { return empty_value_; }

 protected:
  double Evaluate(const Subset& x) const override;
  void EvaluateChainImpl(std::span<const int> order, std::span<double> out) const override;

 private:
  SetFunctionPtr inner_;
  double empty_value_;
};

// Returns `f` itself when f(empty) == 0, otherwise a normalized wrapper.
SetFunctionPtr Normalize(SetFunctionPtr f);

// Subset -> value cache in front of an expensive oracle. The wrapper counts
// every call; the inner oracle only sees cache misses.
class MemoizedFunction : public SetFunction {
 public:
  explicit MemoizedFunction(SetFunctionPtr inner);
  std::size_t cache_size() const;

 protected:
  double Evaluate(const Subset& x) const override;
  void EvaluateChainImpl(std::span<const int> order, std::span<double> out) const override;

 private:
  SetFunctionPtr inner_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Subset, double, SubsetHash> cache_;
};

}  // namespace dsmin

#endif  // DSMIN_SET_FUNCTION_H_
