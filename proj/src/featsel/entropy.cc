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

#include <cmath>
#include <unordered_map>

#include "dsmin/errors.h"
#include "dsmin/featsel.h"
#include "dsmin/functions.h"
#include "row_groups.h"

namespace dsmin {
namespace internal {

RowGroups::RowGroups(const Dataset& ds) : ds_(&ds), ids_(ds.rows(), 0) {}

void RowGroups::Refine(int feature) {
  const std::vector<int>& column = ds_->column(feature);
  const long long arity = ds_->arity(feature);
  const std::size_t m = ids_.size();
  int next = 0;
  if (static_cast<double>(groups_) * arity <= 4.0 * static_cast<double>(m) + 1024.0) {
    std::vector<int> lookup(static_cast<std::size_t>(groups_ * arity), -1);
    for (std::size_t r = 0; r < m; ++r) {
      int& slot = lookup[static_cast<std::size_t>(ids_[r] * arity + column[r])];
      if (slot < 0) slot = next++;
      ids_[r] = slot;
    }
  } else {
    std::unordered_map<long long, int> lookup;
    for (std::size_t r = 0; r < m; ++r) {
      auto [it, fresh] = lookup.emplace(ids_[r] * arity + column[r], next);
      if (fresh) ++next;
      ids_[r] = it->second;
    }
  }
  groups_ = next;
  cells_ = std::min(cells_ * static_cast<double>(arity), 1e300);
}

double SmoothedEntropy(const std::vector<int>& counts, double total, double cells, double alpha) {
  const double observed = static_cast<double>(counts.size());
  const double unseen = (alpha > 0.0 && cells > observed) ? 1.0 : 0.0;
  const double z = total + alpha * (observed + unseen);
  double h = 0.0;
  for (int c : counts) {
    const double p = (c + alpha) / z;
    if (p > 0.0) h -= p * std::log2(p);
  }
  if (unseen > 0.0) {
    const double p = alpha / z;
    h -= p * std::log2(p);
  }
  return h;
}

double RowGroups::Entropy(double alpha) const {
  std::vector<int> counts(groups_, 0);
  for (int id : ids_) ++counts[id];
  return SmoothedEntropy(counts, static_cast<double>(ids_.size()), cells_, alpha);
}

double RowGroups::ConditionalEntropy(double alpha) const {
  const int classes = ds_->classes();
  const std::vector<int>& labels = ds_->labels();
  std::vector<int> joint(static_cast<std::size_t>(groups_) * classes, 0);
  for (std::size_t r = 0; r < ids_.size(); ++r) {
    ++joint[static_cast<std::size_t>(ids_[r]) * classes + labels[r]];
  }
  const std::vector<int>& class_counts = ds_->class_counts();
  const double m = static_cast<double>(ids_.size());
  double h = 0.0;
  std::vector<int> counts;
  for (int c = 0; c < classes; ++c) {
    if (class_counts[c] == 0) continue;
    counts.clear();
    for (int g = 0; g < groups_; ++g) {
      const int k = joint[static_cast<std::size_t>(g) * classes + c];
      if (k > 0) counts.push_back(k);
    }
    h += (class_counts[c] / m) * SmoothedEntropy(counts, class_counts[c], cells_, alpha);
  }
  return h;
}

}  // namespace internal

namespace {

using internal::RowGroups;

void CheckAlpha(double alpha) {
  if (!(alpha >= 0.0)) throw DomainError("smoothing alpha must be non-negative");
}

void CheckSubset(const Dataset& ds, const Subset& a) {
  if (a.universe_size() != ds.features()) throw DomainError("subset does not match dataset width");
}

RowGroups GroupsFor(const Dataset& ds, const Subset& a) {
  RowGroups g(ds);
  for (int j : a.elements()) g.Refine(j);
  return g;
}

std::vector<double> SingleConditionalEntropies(const Dataset& ds, double alpha) {
  std::vector<double> h(ds.features());
  for (int j = 0; j < ds.features(); ++j) {
    RowGroups g(ds);
    g.Refine(j);
    h[j] = g.ConditionalEntropy(alpha);
  }
  return h;
}

// H(X_A) or the non-factored H(X_A | C) over feature subsets.
class GroupEntropyFunction : public SetFunction {
 public:
  GroupEntropyFunction(DatasetPtr ds, double alpha, bool conditional)
      : SetFunction(ds->features()), ds_(std::move(ds)), alpha_(alpha), conditional_(conditional) {}

 protected:
  double Evaluate(const Subset& x) const override { return Value(GroupsFor(*ds_, x)); }

  void EvaluateChainImpl(std::span<const int> order, std::span<double> out) const override {
    RowGroups g(*ds_);
    out[0] = Value(g);
    for (std::size_t i = 0; i < order.size(); ++i) {
      g.Refine(order[i]);
      out[i + 1] = Value(g);
    }
  }

 private:
  double Value(const RowGroups& g) const {
    return conditional_ ? g.ConditionalEntropy(alpha_) : g.Entropy(alpha_);
  }

  DatasetPtr ds_;
  double alpha_;
  bool conditional_;
};

}  // namespace

std::string ToString(MiMode mode) {
  return mode == MiMode::kFactored ? "factored" : "non_factored";
}

double EmpiricalEntropy(const Dataset& ds, const Subset& a, double alpha) {
  CheckAlpha(alpha);
  CheckSubset(ds, a);
  return GroupsFor(ds, a).Entropy(alpha);
}

double ConditionalEntropy(const Dataset& ds, const Subset& a, double alpha, MiMode mode) {
  CheckAlpha(alpha);
  CheckSubset(ds, a);
  if (mode == MiMode::kNonFactored) return GroupsFor(ds, a).ConditionalEntropy(alpha);
  double h = 0.0;
  for (int j : a.elements()) {
    RowGroups g(ds);
    g.Refine(j);
    h += g.ConditionalEntropy(alpha);
  }
  return h;
}

double MutualInformation(const Dataset& ds, const Subset& a, double alpha, MiMode mode) {
  return EmpiricalEntropy(ds, a, alpha) - ConditionalEntropy(ds, a, alpha, mode);
}

SetFunctionPtr EntropyOracle(DatasetPtr ds, double alpha) {
  CheckAlpha(alpha);
  return std::make_shared<GroupEntropyFunction>(std::move(ds), alpha, false);
}

SetFunctionPtr ConditionalEntropyOracle(DatasetPtr ds, double alpha, MiMode mode) {
  CheckAlpha(alpha);
  if (mode == MiMode::kFactored) {
    return std::make_shared<ModularFunction>(SingleConditionalEntropies(*ds, alpha));
  }
  return std::make_shared<GroupEntropyFunction>(std::move(ds), alpha, true);
}

}  // namespace dsmin
