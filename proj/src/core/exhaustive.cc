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

#include "dsmin/exhaustive.h"

#include <algorithm>
#include <limits>
#include <string>

#include "dsmin/errors.h"
#include "dsmin/functions.h"

namespace dsmin {
namespace {

void GuardSize(int n, int limit, const char* what) {
  if (n > limit) {
    throw TooLargeError(std::string(what) + " refuses n = " + std::to_string(n) +
                        " (limit " + std::to_string(limit) + ")");
  }
}

// Returns true when (value, set) should replace the incumbent for a search
// in direction `sign` (+1 minimize, -1 maximize).
bool Better(double value, const Subset& set, const SetValue& best, double sign, double tol) {
  const double d = sign * (value - best.value);
  if (d < -tol) return true;
  if (d > tol) return false;
  return set < best.set;
}

SetValue Search(const SetFunction& f, std::optional<int> max_size, double sign, double tol) {
  const int n = f.n();
  const std::uint64_t count = std::uint64_t{1} << n;
  SetValue best{Subset(n), f(Subset(n))};
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    Subset s = Subset::FromMask(n, mask);
    if (max_size && s.size() > *max_size) continue;
    const double value = f(s);
    if (Better(value, s, best, sign, tol)) best = {std::move(s), value};
  }
  return best;
}

}  // namespace

SetValue BruteForceMinimize(const SetFunction& f, double tol) {
  GuardSize(f.n(), kMaxBruteForceN, "brute-force minimization");
  return Search(f, std::nullopt, 1.0, tol);
}

SetValue BruteForceMaximize(const SetFunction& f, std::optional<int> max_size, double tol) {
  GuardSize(f.n(), kMaxBruteForceN, "brute-force maximization");
  return Search(f, max_size, -1.0, tol);
}

double SubmodularityMargin(int n, const std::vector<double>& table) {
  GuardSize(n, kMaxSubmodularCheckN, "exhaustive submodularity check");
  const std::uint64_t count = std::uint64_t{1} << n;
  if (table.size() != count) throw DomainError("table size must be 2^n");
  constexpr double kInf = std::numeric_limits<double>::infinity();
  double margin = kInf;
  std::vector<double> gain(count, kInf);
  std::vector<double> below(count, kInf);  // min gain over subsets of Y
  for (int j = 0; j < n; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    for (std::uint64_t y = 0; y < count; ++y) {
      if (y & bit) continue;
      gain[y] = table[y | bit] - table[y];
      below[y] = gain[y];
    }
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      const std::uint64_t ib = std::uint64_t{1} << i;
      for (std::uint64_t y = 0; y < count; ++y) {
        if ((y & bit) || !(y & ib)) continue;
        below[y] = std::min(below[y], below[y ^ ib]);
      }
    }
    for (std::uint64_t y = 1; y < count; ++y) {
      if (y & bit) continue;
      // Strict subsets of Y are exactly the subsets of Y - i for some i in Y.
      double strict_min = kInf;
      for (std::uint64_t rest = y; rest; rest &= rest - 1) {
        const std::uint64_t ib = rest & (~rest + 1);
        strict_min = std::min(strict_min, below[y ^ ib]);
      }
      margin = std::min(margin, strict_min - gain[y]);
    }
  }
  return margin;
}

double SubmodularityMargin(const SetFunction& f) {
  GuardSize(f.n(), kMaxSubmodularCheckN, "exhaustive submodularity check");
  return SubmodularityMargin(f.n(), Tabulate(f));
}

bool CheckSubmodular(const SetFunction& f, double tol) {
  return SubmodularityMargin(f) >= -tol;
}

}  // namespace dsmin
