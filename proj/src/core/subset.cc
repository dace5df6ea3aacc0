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

#include "dsmin/subset.h"

#include <bit>
#include <sstream>

#include "dsmin/errors.h"

namespace dsmin {
namespace {

constexpr int kWordBits = 64;

int WordCount(int n) { return (n + kWordBits - 1) / kWordBits; }

}  // namespace

Subset::Subset(int n) : n_(n), words_(WordCount(n), 0) {
  if (n < 0) throw DomainError("subset universe size must be non-negative");
}

Subset Subset::Full(int n) {
  Subset s(n);
  for (int j = 0; j < n; ++j) s.insert(j);
  return s;
}

Subset Subset::FromElements(int n, std::span<const int> elements) {
  Subset s(n);
  for (int j : elements) s.insert(j);
  return s;
}

Subset Subset::FromElements(int n, std::initializer_list<int> elements) {
  return FromElements(n, std::span<const int>(elements.begin(), elements.size()));
}

Subset Subset::FromMask(int n, std::uint64_t mask) {
  if (n > kWordBits) throw DomainError("FromMask requires n <= 64");
  Subset s(n);
  if (n > 0) {
    const std::uint64_t valid = n == kWordBits ? ~0ULL : ((1ULL << n) - 1);
    if (mask & ~valid) throw DomainError("mask has bits outside the universe");
    s.words_[0] = mask;
  }
  return s;
}

int Subset::size() const {
  int count = 0;
  for (std::uint64_t w : words_) count += std::popcount(w);
  return count;
}

void Subset::CheckIndex(int j) const {
  if (j < 0 || j >= n_) {
    throw DomainError("element index " + std::to_string(j + 1) +
                      " out of range 1.." + std::to_string(n_));
  }
}

void Subset::CheckSameUniverse(const Subset& other) const {
  if (n_ != other.n_) throw DomainError("subsets over different ground sets");
}

bool Subset::contains(int j) const {
  CheckIndex(j);
  return (words_[j / kWordBits] >> (j % kWordBits)) & 1ULL;
}

void Subset::insert(int j) {
  CheckIndex(j);
  words_[j / kWordBits] |= 1ULL << (j % kWordBits);
}

void Subset::erase(int j) {
  CheckIndex(j);
  words_[j / kWordBits] &= ~(1ULL << (j % kWordBits));
}

Subset Subset::With(int j) const {
  Subset s = *this;
  s.insert(j);
  return s;
}

Subset Subset::Without(int j) const {
  Subset s = *this;
  s.erase(j);
  return s;
}

Subset Subset::Complement() const {
  Subset s = Full(n_);
  s -= *this;
  return s;
}

bool Subset::IsSubsetOf(const Subset& other) const {
  CheckSameUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<int>(i) * kWordBits + bit);
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t Subset::mask() const {
  if (n_ > kWordBits) throw DomainError("mask() requires n <= 64");
  return words_.empty() ? 0 : words_[0];
}

Subset& Subset::operator|=(const Subset& other) {
  CheckSameUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  CheckSameUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  CheckSameUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  // Same cardinality: the first differing element decides. The set holding
  // the smaller element at that position is lexicographically smaller.
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff) {
      const std::uint64_t lowest = diff & (~diff + 1);
      return (a.words_[i] & lowest) ? std::strong_ordering::less
                                    : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t Subset::Hash() const {
  std::size_t h = static_cast<std::size_t>(n_) * 0x9E3779B97F4A7C15ULL;
  for (std::uint64_t w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Subset::ToString() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int j : elements()) {
    if (!first) os << ',';
    os << j + 1;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace dsmin
