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

#ifndef DSMIN_SUBSET_H_
#define DSMIN_SUBSET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace dsmin {

// A subset of the ground set {0, ..., n-1}, stored as a fixed-width bitset.
//
// Elements are 0-based in the library. Everything that leaves the process
// (JSON, CSV, CLI output) is written 1-based.
//
// Ordering is canonical: smaller cardinality first, then the
// lexicographically smaller sorted element list. All tie-breaking in the
// solvers goes through this ordering.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int n);

  static Subset Full(int n);
  static Subset FromElements(int n, std::span<const int> elements);
  static Subset FromElements(int n, std::initializer_list<int> elements);
  // Bit j of `mask` is element j. Requires n <= 64.
  static Subset FromMask(int n, std::uint64_t mask);

  int universe_size() const { return n_; }
  int size() const;
  bool empty() const { return size() == 0; }

  bool contains(int j) const;
  void insert(int j);
  void erase(int j);

  Subset With(int j) const;
  Subset Without(int j) const;
  Subset Complement() const;
  bool IsSubsetOf(const Subset& other) const;

  // Sorted ascending.
  std::vector<int> elements() const;
  std::uint64_t mask() const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator-=(const Subset& other);
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

  std::size_t Hash() const;

  // "{1,3}" with 1-based labels.
  std::string ToString() const;

 private:
  void CheckIndex(int j) const;
  void CheckSameUniverse(const Subset& other) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.Hash(); }
};

}  // namespace dsmin

#endif  // DSMIN_SUBSET_H_
