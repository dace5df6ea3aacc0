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

#ifndef DSMIN_DATASET_H_
#define DSMIN_DATASET_H_

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace dsmin {

// Categorical samples stored column by column. Feature values are
// non-negative integers; classes are dense ids 0..classes()-1.
class Dataset {
 public:
  // Throws DomainError on ragged columns, negative values, missing labels or
  // out-of-range class ids.
  Dataset(std::vector<std::vector<int>> columns, std::vector<int> labels,
          std::vector<std::string> class_names);

  int rows() const { return static_cast<int>(labels_.size()); }
  int features() const { return static_cast<int>(columns_.size()); }
  int classes() const { return static_cast<int>(class_names_.size()); }
  int value(int row, int feature) const { return columns_[feature][row]; }
  const std::vector<int>& column(int feature) const { return columns_[feature]; }
  const std::vector<int>& labels() const { return labels_; }
  // max value + 1, at least 1.
  int arity(int feature) const { return arity_[feature]; }
  const std::vector<std::string>& class_names() const { return class_names_; }
  const std::vector<int>& class_counts() const { return class_counts_; }

 private:
  std::vector<std::vector<int>> columns_;
  std::vector<int> labels_;
  std::vector<std::string> class_names_;
  std::vector<int> arity_;
  std::vector<int> class_counts_;
};

enum class DatasetFormat {
  kSparse,  // "label idx:val idx:val ...", 1-based strictly increasing indices
  kDense,   // "label v1 v2 ..." separated by spaces or commas
};

// Class names are ordered numerically when every label parses as a number,
// lexicographically otherwise. Absent sparse entries are 0. With
// n_features unset the width is the largest index seen. Errors name the
// offending line.
Dataset ParseDataset(std::istream& in, DatasetFormat format,
                     std::optional<int> n_features = std::nullopt);
Dataset ReadDataset(const std::string& path, DatasetFormat format,
                    std::optional<int> n_features = std::nullopt);

DatasetFormat ParseDatasetFormat(const std::string& s);  // "sparse" | "dense"

// Binary class C, noise N with P(N = 1) = 1/4, and balanced noise bits,
// laid out as a full factorial design repeated `replicas` times so every
// independence holds exactly in the data. Features: 1 = C xor N, 2 = N,
// 3 = copy of feature 1, then the noise bits. Feature 2 is
// uninformative alone but removes all remaining uncertainty once feature 1
// is known, which the factored conditional entropy cannot see.
Dataset MakeDuplicatedFeatureDataset(int replicas = 64, int noise_features = 3);

}  // namespace dsmin

#endif  // DSMIN_DATASET_H_
