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

#include "dsmin/bounds.h"

#include <algorithm>
#include <cmath>

#include "dsmin/errors.h"
#include "dsmin/functions.h"

namespace dsmin {

AffineModular ModularLowerBound(const SetFunction& g, const Subset& y, const Permutation& sigma) {
  const int n = g.n();
  if (sigma.n() != n) throw DomainError("permutation and function have different ground sets");
  if (!sigma.ChainContains(y)) {
    throw PreconditionError("permutation chain does not contain " + y.ToString());
  }
  std::vector<double> chain(n + 1);
  g.EvaluateChain(sigma.order(), chain);
  if (std::abs(chain[0]) > kDefaultTolerance) {
    throw PreconditionError("modular lower bound requires g(empty) = 0");
  }
  AffineModular h{0.0, std::vector<double>(n)};
  for (int i = 0; i < n; ++i) h.weights[sigma[i]] = chain[i + 1] - chain[i];
  return h;
}

AffineModular ModularUpperBound(const SetFunction& f, const Subset& x, UpperBoundVariant variant) {
  const int n = f.n();
  if (x.universe_size() != n) throw DomainError("subset does not match function");
  AffineModular m{0.0, std::vector<double>(n)};
  const double fx = f(x);
  double inside = 0.0;
  if (variant == UpperBoundVariant::kFirst) {
    const double f_empty = f(Subset(n));
    for (int j = 0; j < n; ++j) {
      if (x.contains(j)) {
        m.weights[j] = fx - f(x.Without(j));
        inside += m.weights[j];
      } else {
        Subset single(n);
        single.insert(j);
        m.weights[j] = f(single) - f_empty;
      }
    }
  } else {
    const Subset full = Subset::Full(n);
    const double f_full = f(full);
    for (int j = 0; j < n; ++j) {
      if (x.contains(j)) {
        m.weights[j] = f_full - f(full.Without(j));
        inside += m.weights[j];
      } else {
        m.weights[j] = f(x.With(j)) - fx;
      }
    }
  }
  m.offset = fx - inside;
  return m;
}

namespace {

std::vector<double> TopGains(const SetFunction& f) {
  const int n = f.n();
  const Subset full = Subset::Full(n);
  const double f_full = f(full);
  std::vector<double> k(n);
  for (int j = 0; j < n; ++j) k[j] = f_full - f(full.Without(j));
  return k;
}

SetFunctionPtr MinusModular(const SetFunctionPtr& f, const std::vector<double>& k) {
  std::vector<double> neg(k.size());
  std::transform(k.begin(), k.end(), neg.begin(), [](double w) { return -w; });
  return std::make_shared<ScaledSum>(std::vector<ScaledTerm>{
      {1.0, f}, {1.0, std::make_shared<ModularFunction>(std::move(neg))}});
}

}  // namespace

NormalizedPart TotallyNormalize(const SetFunctionPtr& f) {
  std::vector<double> k = TopGains(*f);
  return {MinusModular(f, k), std::move(k)};
}

TotalNormalization TotallyNormalize(const SetFunctionPtr& f, const SetFunctionPtr& g) {
  if (f->n() != g->n()) throw DomainError("f and g must share a ground set");
  NormalizedPart fp = TotallyNormalize(f);
  NormalizedPart gp = TotallyNormalize(g);
  AffineModular k{0.0, fp.modular};
  for (int j = 0; j < f->n(); ++j) k.weights[j] -= gp.modular[j];
  return {std::move(fp.f_prime), std::move(gp.f_prime), std::move(k)};
}

namespace {

double Bound2(const TotalNormalization& t) {
  const int n = t.k.n();
  double bound = (*t.f_prime)(Subset(n)) - (*t.g_prime)(Subset::Full(n));
  for (double kj : t.k.weights) bound += std::min(kj, 0.0);
  return bound;
}

}  // namespace

MinimaLowerBounds ComputeMinimaLowerBounds(const SetFunctionPtr& f, const SetFunctionPtr& g,
                                           const SubmodularMinimizer& minimize) {
  const TotalNormalization t = TotallyNormalize(f, g);
  // f'(X) + k(X) is submodular: f' is, k is modular.
  ScaledSum inner({{1.0, t.f_prime}, {1.0, std::make_shared<ModularFunction>(t.k)}});
  MinimaLowerBounds b;
  b.bound1 = minimize(inner) - (*t.g_prime)(Subset::Full(f->n()));
  b.bound2 = Bound2(t);
  return b;
}

double ModularMinimaLowerBound(const SetFunctionPtr& f, const SetFunctionPtr& g) {
  return Bound2(TotallyNormalize(f, g));
}

}  // namespace dsmin
