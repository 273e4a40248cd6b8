// Copyright 2026 The acscg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ACSCG_TYPES_HPP
#define ACSCG_TYPES_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace acscg {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Absolute tolerance for box/budget feasibility checks.
inline constexpr double kFeasibilityTol = 1e-9;

// Box-plus-budget action set: x with lower <= x <= upper and sum(x) <= budget.
struct SumConstrainedSet {
  Vector lower;
  Vector upper;
  double budget = 0.0;

  int dim() const { return static_cast<int>(lower.size()); }

  // Budget actually attainable when marginal utilities are positive: the
  // per-coordinate caps may bind before the sum does.
  double effective_budget() const {
    return std::min(budget, upper.sum());
  }

  Vector clamp_to_box(Vector x) const {
    return x.cwiseMax(lower).cwiseMin(upper);
  }

  bool contains(const Vector& x, double tol = kFeasibilityTol) const {
    if (x.size() != lower.size()) return false;
    if ((x.array() < lower.array() - tol).any()) return false;
    if ((x.array() > upper.array() + tol).any()) return false;
    return x.sum() <= budget + tol;
  }

  // Empty when the invariants fail; messages name the violated constraint.
  std::vector<std::string> validate() const;
};

// Joint action a(n, k) for N players and K dimensions.
struct ActionProfile {
  Matrix a;

  ActionProfile() = default;
  explicit ActionProfile(Matrix actions) : a(std::move(actions)) {}
  static ActionProfile zero(int players, int dims) {
    return ActionProfile(Matrix::Zero(players, dims));
  }

  int players() const { return static_cast<int>(a.rows()); }
  int dims() const { return static_cast<int>(a.cols()); }
  Vector row(int n) const { return a.row(n).transpose(); }
  void set_row(int n, const Vector& x) { a.row(n) = x.transpose(); }
};

// Strictly positive weights for the weighted Euclidean norm.
struct WeightVector {
  Vector w;

  explicit WeightVector(Vector weights);
  static WeightVector ones(int k) { return WeightVector(Vector::Ones(k)); }

  int dim() const { return static_cast<int>(w.size()); }
  double norm(const Vector& x) const {
    return std::sqrt((w.array() * x.array().square()).sum());
  }
};

}  // namespace acscg

#endif  // ACSCG_TYPES_HPP
