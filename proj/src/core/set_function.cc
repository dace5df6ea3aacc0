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

#include "dsmin/set_function.h"

#include <cmath>
#include <string>

#include "dsmin/errors.h"

namespace dsmin {

SetFunction::SetFunction(int n) : n_(n) {
  if (n < 1) throw DomainError("ground set must have at least one element");
}

double SetFunction::operator()(const Subset& x) const {
  if (x.universe_size() != n_) {
    throw DomainError("subset over " + std::to_string(x.universe_size()) +
                      " elements passed to a function over " + std::to_string(n_));
  }
  calls_.fetch_add(1, std::memory_order_relaxed);
  return Evaluate(x);
}

void SetFunction::EvaluateChain(std::span<const int> order, std::span<double> out) const {
  if (out.size() != order.size() + 1) throw DomainError("chain output has wrong size");
  for (int j : order) {
    if (j < 0 || j >= n_) throw DomainError("chain element out of range");
  }
  calls_.fetch_add(static_cast<std::int64_t>(out.size()), std::memory_order_relaxed);
  EvaluateChainImpl(order, out);
}

void SetFunction::EvaluateChainImpl(std::span<const int> order, std::span<double> out) const {
  Subset prefix(n_);
  out[0] = Evaluate(prefix);
  for (std::size_t i = 0; i < order.size(); ++i) {
    prefix.insert(order[i]);
    out[i + 1] = Evaluate(prefix);
  }
}

double Gain(const SetFunction& f, int j, const Subset& x) {
  if (j < 0 || j >= f.n()) {
    throw DomainError("element index " + std::to_string(j + 1) + " out of range 1.." +
                      std::to_string(f.n()));
  }
  if (x.contains(j)) return 0.0;
  return f(x.With(j)) - f(x);
}

double AffineModular::operator()(const Subset& x) const {
  if (x.universe_size() != n()) throw DomainError("subset does not match modular function");
  double total = offset;
  for (int j : x.elements()) total += weights[j];
  return total;
}

AffineModular operator-(const AffineModular& a, const AffineModular& b) {
  if (a.n() != b.n()) throw DomainError("modular functions over different ground sets");
  AffineModular out{a.offset - b.offset, a.weights};
  for (int j = 0; j < a.n(); ++j) out.weights[j] -= b.weights[j];
  return out;
}

DifferenceFunction::DifferenceFunction(SetFunctionPtr f, SetFunctionPtr g)
    : SetFunction(f->n()), f_(std::move(f)), g_(std::move(g)) {
  if (f_->n() != g_->n()) throw DomainError("f and g must share a ground set");
}

double DifferenceFunction::Evaluate(const Subset& x) const { return (*f_)(x) - (*g_)(x); }

void DifferenceFunction::EvaluateChainImpl(std::span<const int> order,
                                           std::span<double> out) const {
  std::vector<double> gv(out.size());
  f_->EvaluateChain(order, out);
  g_->EvaluateChain(order, gv);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= gv[i];
}

NormalizedFunction::NormalizedFunction(SetFunctionPtr inner)
    : SetFunction(inner->n()), inner_(std::move(inner)) {
  empty_value_ = (*inner_)(Subset(n()));
}

double NormalizedFunction::Evaluate(const Subset& x) const {
  return (*inner_)(x) - empty_value_;
}

void NormalizedFunction::EvaluateChainImpl(std::span<const int> order,
                                           std::span<double> out) const {
  inner_->EvaluateChain(order, out);
  for (double& v : out) v -= empty_value_;
}

SetFunctionPtr Normalize(SetFunctionPtr f) {
  if ((*f)(Subset(f->n())) == 0.0) return f;
  return std::make_shared<NormalizedFunction>(std::move(f));
}

MemoizedFunction::MemoizedFunction(SetFunctionPtr inner)
    : SetFunction(inner->n()), inner_(std::move(inner)) {}

std::size_t MemoizedFunction::cache_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.size();
}

double MemoizedFunction::Evaluate(const Subset& x) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = cache_.find(x); it != cache_.end()) return it->second;
  }
  const double value = (*inner_)(x);
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(x, value);
  return value;
}

void MemoizedFunction::EvaluateChainImpl(std::span<const int> order,
                                         std::span<double> out) const {
  std::vector<Subset> prefixes;
  prefixes.reserve(out.size());
  Subset prefix(n());
  prefixes.push_back(prefix);
  for (int j : order) {
    prefix.insert(j);
    prefixes.push_back(prefix);
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    bool all_cached = true;
    for (std::size_t i = 0; i < prefixes.size() && all_cached; ++i) {
      auto it = cache_.find(prefixes[i]);
      if (it == cache_.end()) {
        all_cached = false;
      } else {
        out[i] = it->second;
      }
    }
    if (all_cached) return;
  }
  inner_->EvaluateChain(order, out);
  std::lock_guard<std::mutex> lock(mu_);
  for (std::size_t i = 0; i < prefixes.size(); ++i) cache_.emplace(prefixes[i], out[i]);
}

}  // namespace dsmin
