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
#include <limits>
#include <random>

#include "dsmin/errors.h"
#include "dsmin/featsel.h"

namespace dsmin {
namespace {

// Per-row fold ids: each class's rows are shuffled and dealt round-robin.
std::vector<int> StratifiedFolds(const Dataset& ds, int folds, std::uint64_t seed) {
  std::vector<std::vector<int>> by_class(ds.classes());
  for (int r = 0; r < ds.rows(); ++r) by_class[ds.labels()[r]].push_back(r);
  std::mt19937_64 rng(seed);
  std::vector<int> fold(ds.rows(), 0);
  int offset = 0;
  for (auto& rows : by_class) {
    std::shuffle(rows.begin(), rows.end(), rng);
    // Continue the deal where the previous class stopped so fold sizes stay
    // balanced overall.
    for (std::size_t i = 0; i < rows.size(); ++i) {
      fold[rows[i]] = static_cast<int>((offset + i) % folds);
    }
    offset = static_cast<int>((offset + rows.size()) % folds);
  }
  return fold;
}

}  // namespace

double NaiveBayesCV(const Dataset& ds, const Subset& a, int folds, double alpha,
                    std::uint64_t seed) {
  if (folds < 2) throw DomainError("naive Bayes CV needs at least 2 folds");
  if (folds > ds.rows()) throw DomainError("more folds than rows");
  if (!(alpha >= 0.0)) throw DomainError("smoothing alpha must be non-negative");
  if (a.universe_size() != ds.features()) throw DomainError("subset does not match dataset width");

  const int classes = ds.classes();
  const std::vector<int> features = a.elements();
  const std::vector<int> fold = StratifiedFolds(ds, folds, seed);
  const std::vector<int>& labels = ds.labels();

  // offset[k] locates feature features[k] in the flat (class, value) tables.
  std::vector<std::size_t> offset(features.size() + 1, 0);
  for (std::size_t k = 0; k < features.size(); ++k) {
    offset[k + 1] = offset[k] + static_cast<std::size_t>(classes) * ds.arity(features[k]);
  }
  // Counts over all rows and per fold; training counts are the difference.
  std::vector<long long> total_class(classes, 0);
  std::vector<std::vector<long long>> fold_class(folds, std::vector<long long>(classes, 0));
  std::vector<long long> total_value(offset.back(), 0);
  std::vector<std::vector<long long>> fold_value(folds, std::vector<long long>(offset.back(), 0));
  for (int r = 0; r < ds.rows(); ++r) {
    const int c = labels[r];
    ++total_class[c];
    ++fold_class[fold[r]][c];
    for (std::size_t k = 0; k < features.size(); ++k) {
      const std::size_t cell = offset[k] + static_cast<std::size_t>(c) * ds.arity(features[k]) +
                               ds.value(r, features[k]);
      ++total_value[cell];
      ++fold_value[fold[r]][cell];
    }
  }

  const double kNegInf = -std::numeric_limits<double>::infinity();
  auto safe_log = [&](double x) { return x > 0.0 ? std::log(x) : kNegInf; };
  double accuracy_sum = 0.0;
  int scored_folds = 0;
  std::vector<double> log_value(offset.back());
  std::vector<double> log_prior(classes);
  for (int f = 0; f < folds; ++f) {
    long long train_rows = 0;
    std::vector<long long> train_class(classes);
    for (int c = 0; c < classes; ++c) {
      train_class[c] = total_class[c] - fold_class[f][c];
      train_rows += train_class[c];
    }
    for (int c = 0; c < classes; ++c) {
      log_prior[c] = safe_log(train_class[c] + alpha) - safe_log(train_rows + alpha * classes);
    }
    for (std::size_t k = 0; k < features.size(); ++k) {
      const int arity = ds.arity(features[k]);
      for (int c = 0; c < classes; ++c) {
        const double denom = safe_log(train_class[c] + alpha * arity);
        for (int v = 0; v < arity; ++v) {
          const std::size_t cell = offset[k] + static_cast<std::size_t>(c) * arity + v;
          log_value[cell] = safe_log(total_value[cell] - fold_value[f][cell] + alpha) - denom;
        }
      }
    }
    long long tested = 0;
    long long correct = 0;
    for (int r = 0; r < ds.rows(); ++r) {
      if (fold[r] != f) continue;
      int best = 0;
      double best_score = kNegInf;
      for (int c = 0; c < classes; ++c) {
        double score = log_prior[c];
        for (std::size_t k = 0; k < features.size() && score > kNegInf; ++k) {
          const int arity = ds.arity(features[k]);
          score += log_value[offset[k] + static_cast<std::size_t>(c) * arity + ds.value(r, features[k])];
        }
        if (score > best_score) {
          best = c;
          best_score = score;
        }
      }
      ++tested;
      if (best == labels[r]) ++correct;
    }
    if (tested > 0) {
      accuracy_sum += static_cast<double>(correct) / tested;
      ++scored_folds;
    }
  }
  return accuracy_sum / scored_folds;
}

}  // namespace dsmin
