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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "dsmin/errors.h"
#include "dsmin/exhaustive.h"
#include "dsmin/sfm.h"

namespace dsmin {
namespace {

// Vertices with a convex coefficient below this are dropped.
constexpr double kDropCoefficient = 1e-12;

class LevelSetTracker {
 public:
  explicit LevelSetTracker(int n) : best_{Subset(n), 0.0} {}

  // Offers every prefix of the vertex order as a candidate minimizer.
  void Offer(const BaseVertex& v) {
    Subset prefix(static_cast<int>(v.order.size()));
    Consider(prefix, v.chain[0]);
    for (std::size_t i = 0; i < v.order.size(); ++i) {
      prefix.insert(v.order[i]);
      Consider(prefix, v.chain[i + 1]);
    }
  }

  const SetValue& best() const { return best_; }

 private:
  void Consider(const Subset& s, double value) {
    if (!seeded_ || value < best_.value - kDefaultTolerance ||
        (value <= best_.value + kDefaultTolerance && s < best_.set)) {
      best_ = {s, value};
      seeded_ = true;
    }
  }

  SetValue best_;
  bool seeded_ = false;
};

// Coefficients of the point of minimum norm in the affine hull of `points`.
Eigen::VectorXd AffineMinimizer(const std::vector<Eigen::VectorXd>& points) {
  const int k = static_cast<int>(points.size());
  Eigen::VectorXd mu(k);
  if (k == 1) {
    mu(0) = 1.0;
    return mu;
  }
  const Eigen::Index n = points[0].size();
  Eigen::MatrixXd diff(n, k - 1);
  for (int i = 1; i < k; ++i) diff.col(i - 1) = points[i] - points[0];
  const Eigen::VectorXd c = diff.colPivHouseholderQr().solve(-points[0]);
  mu(0) = 1.0 - c.sum();
  mu.tail(k - 1) = c;
  return mu;
}

Eigen::VectorXd Combine(const std::vector<Eigen::VectorXd>& points, const Eigen::VectorXd& coef) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(points[0].size());
  for (std::size_t i = 0; i < points.size(); ++i) x += coef(static_cast<Eigen::Index>(i)) * points[i];
  return x;
}

void DropSmall(std::vector<Eigen::VectorXd>& points, Eigen::VectorXd& coef) {
  std::vector<Eigen::VectorXd> kept_points;
  std::vector<double> kept;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (coef(static_cast<Eigen::Index>(i)) > kDropCoefficient) {
      kept_points.push_back(std::move(points[i]));
      kept.push_back(coef(static_cast<Eigen::Index>(i)));
    }
  }
  points = std::move(kept_points);
  coef = Eigen::Map<Eigen::VectorXd>(kept.data(), static_cast<Eigen::Index>(kept.size()));
  coef /= coef.sum();
}

SfmResult MakeResult(const LevelSetTracker& tracker, const Eigen::VectorXd& x, int cycles) {
  SfmResult r;
  r.minimizer = tracker.best().set;
  r.value = tracker.best().value;
  r.point.assign(x.data(), x.data() + x.size());
  r.dual_bound = 0.0;
  for (double xj : r.point) r.dual_bound += std::min(xj, 0.0);
  r.gap = r.value - r.dual_bound;
  r.major_cycles = cycles;
  return r;
}

}  // namespace

SfmResult MinNormPoint(const SetFunction& f, const MinNormOptions& options) {
  const int n = f.n();
  if (!(options.tol > 0.0)) throw DomainError("min-norm tolerance must be positive");
  const int cap = options.max_major_cycles > 0 ? options.max_major_cycles : 100 * n * n;

  LevelSetTracker tracker(n);
  const std::vector<double> zeros(n, 0.0);
  BaseVertex first = GreedyBaseVertex(f, zeros);
  if (std::abs(first.chain[0]) > kDefaultTolerance) {
    throw PreconditionError("min-norm point requires f(empty) = 0");
  }
  tracker.Offer(first);

  std::vector<Eigen::VectorXd> points{Eigen::Map<Eigen::VectorXd>(first.coords.data(), n)};
  Eigen::VectorXd lambda = Eigen::VectorXd::Ones(1);
  Eigen::VectorXd x = points[0];
  double max_sq_norm = x.squaredNorm();

  for (int cycle = 1; cycle <= cap; ++cycle) {
    const BaseVertex q = GreedyBaseVertex(f, std::span<const double>(x.data(), n));
    tracker.Offer(q);
    const Eigen::VectorXd qv = Eigen::Map<const Eigen::VectorXd>(q.coords.data(), n);
    max_sq_norm = std::max(max_sq_norm, qv.squaredNorm());

    SfmResult current = MakeResult(tracker, x, cycle);
    if (current.gap <= options.tol * std::max(1.0, std::abs(current.value))) return current;
    // Wolfe's criterion: x is (nearly) the minimum-norm point of B_f.
    if (x.squaredNorm() - x.dot(qv) <= options.tol * std::max(1.0, max_sq_norm)) return current;
    bool repeated = false;
    for (const auto& p : points) {
      if ((p - qv).lpNorm<Eigen::Infinity>() <= 1e-15 * std::max(1.0, std::sqrt(max_sq_norm))) {
        repeated = true;
        break;
      }
    }
    if (repeated) return current;

    points.push_back(qv);
    lambda.conservativeResize(lambda.size() + 1);
    lambda(lambda.size() - 1) = 0.0;

    // Minor cycles: move toward the affine minimizer while staying in the
    // convex hull, dropping vertices whose coefficient reaches zero.
    for (std::size_t minor = 0; minor <= points.size() + 1; ++minor) {
      const Eigen::VectorXd mu = AffineMinimizer(points);
      if ((mu.array() > kDropCoefficient).all()) {
        lambda = mu;
        x = Combine(points, lambda);
        break;
      }
      double theta = 1.0;
      for (Eigen::Index i = 0; i < mu.size(); ++i) {
        if (mu(i) <= kDropCoefficient) {
          const double denom = lambda(i) - mu(i);
          if (denom > 0.0) theta = std::min(theta, lambda(i) / denom);
        }
      }
      lambda = (1.0 - theta) * lambda + theta * mu;
      DropSmall(points, lambda);
      x = Combine(points, lambda);
    }
  }
  throw SfmConvergenceError(
      "min-norm point did not converge within " + std::to_string(cap) + " major cycles",
      MakeResult(tracker, x, cap));
}

SfmResult BruteForceSfm(const SetFunction& f) {
  const SetValue best = BruteForceMinimize(f);
  SfmResult r;
  r.minimizer = best.set;
  r.value = best.value;
  r.dual_bound = best.value;
  return r;
}

}  // namespace dsmin
