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

#include "dsmin/functions.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "dsmin/errors.h"

namespace dsmin {

ModularFunction::ModularFunction(std::vector<double> weights, double offset)
    : SetFunction(static_cast<int>(weights.size())), m_{offset, std::move(weights)} {}

ModularFunction::ModularFunction(AffineModular m) : SetFunction(m.n()), m_(std::move(m)) {}

ConcaveOfModular::ConcaveOfModular(ConcaveShape shape, std::vector<double> weights, double cap)
    : SetFunction(static_cast<int>(weights.size())),
      shape_(shape),
      weights_(std::move(weights)),
      cap_(cap) {
  for (double w : weights_) {
    if (!(w >= 0.0)) throw DomainError("concave_of_modular weights must be non-negative");
  }
  if (shape_ == ConcaveShape::kCap && !(cap_ >= 0.0)) {
    throw DomainError("concave_of_modular cap must be non-negative");
  }
}

double ConcaveOfModular::Apply(double t) const {
  switch (shape_) {
    case ConcaveShape::kSqrt:
      return std::sqrt(t);
    case ConcaveShape::kLog1p:
      return std::log1p(t);
    case ConcaveShape::kCap:
      return std::min(t, cap_);
  }
  return 0.0;
}

double ConcaveOfModular::Evaluate(const Subset& x) const {
  double t = 0.0;
  for (int j : x.elements()) t += weights_[j];
  return Apply(t);
}

void ConcaveOfModular::EvaluateChainImpl(std::span<const int> order,
                                         std::span<double> out) const {
  double t = 0.0;
  out[0] = Apply(0.0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    t += weights_[order[i]];
    out[i + 1] = Apply(t);
  }
}

GraphCut::GraphCut(int n, std::vector<WeightedEdge> edges)
    : SetFunction(n), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw DomainError("graph_cut edge endpoint out of range");
    }
    if (!(e.weight >= 0.0)) throw DomainError("graph_cut edge weights must be non-negative");
  }
}

double GraphCut::Evaluate(const Subset& x) const {
  double total = 0.0;
  for (const auto& e : edges_) {
    if (x.contains(e.u) != x.contains(e.v)) total += e.weight;
  }
  return total;
}

namespace {

int BenefitColumns(const std::vector<std::vector<double>>& benefits) {
  if (benefits.empty() || benefits.front().empty()) {
    throw DomainError("facility_location needs at least one client and one element");
  }
  return static_cast<int>(benefits.front().size());
}

}  // namespace

FacilityLocation::FacilityLocation(std::vector<std::vector<double>> benefits)
    : SetFunction(BenefitColumns(benefits)), benefits_(std::move(benefits)) {
  for (const auto& row : benefits_) {
    if (static_cast<int>(row.size()) != n()) {
      throw DomainError("facility_location rows must all have n columns");
    }
    for (double b : row) {
      if (!(b >= 0.0)) throw DomainError("facility_location benefits must be non-negative");
    }
  }
}

double FacilityLocation::Evaluate(const Subset& x) const {
  const std::vector<int> members = x.elements();
  if (members.empty()) return 0.0;
  double total = 0.0;
  for (const auto& row : benefits_) {
    double best = 0.0;
    for (int j : members) best = std::max(best, row[j]);
    total += best;
  }
  return total;
}

ExplicitTable::ExplicitTable(int n, std::vector<double> values)
    : SetFunction(n), values_(std::move(values)) {
  if (n > 20) throw TooLargeError("explicit_table supports n <= 20");
  if (values_.size() != (std::size_t{1} << n)) {
    throw DomainError("explicit_table needs 2^n = " + std::to_string(1 << n) + " values, got " +
                      std::to_string(values_.size()));
  }
}

namespace {

int TermsGroundSize(const std::vector<ScaledTerm>& terms) {
  if (terms.empty()) throw DomainError("scaled_sum needs at least one term");
  for (const auto& t : terms) {
    if (!t.function) throw DomainError("scaled_sum term without a function");
  }
  return terms.front().function->n();
}

}  // namespace

ScaledSum::ScaledSum(std::vector<ScaledTerm> terms)
    : SetFunction(TermsGroundSize(terms)), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.function->n() != n()) throw DomainError("scaled_sum terms over different ground sets");
  }
}

double ScaledSum::Evaluate(const Subset& x) const {
  double total = 0.0;
  for (const auto& t : terms_) total += t.coefficient * (*t.function)(x);
  return total;
}

void ScaledSum::EvaluateChainImpl(std::span<const int> order, std::span<double> out) const {
  std::fill(out.begin(), out.end(), 0.0);
  std::vector<double> part(out.size());
  for (const auto& t : terms_) {
    t.function->EvaluateChain(order, part);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += t.coefficient * part[i];
  }
}

std::vector<double> Tabulate(const SetFunction& f) {
  const int n = f.n();
  if (n > 25) throw TooLargeError("tabulation supports n <= 25");
  std::vector<double> values(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < values.size(); ++mask) {
    values[mask] = f(Subset::FromMask(n, mask));
  }
  return values;
}

}  // namespace dsmin
