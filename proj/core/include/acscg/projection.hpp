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

#ifndef ACSCG_PROJECTION_HPP
#define ACSCG_PROJECTION_HPP

#include "acscg/types.hpp"

namespace acscg {

// argmin_{x in set} sum_k w_k (x_k - point_k)^2.
//
// The box clamp of `point` is returned directly when it satisfies the budget
// inequality; otherwise the point is projected onto the budget-equality face,
// where the minimizer has the single-multiplier form
// x_k = clamp(point_k + lambda / w_k) with lambda < 0 found by monotone
// bisection. Throws InvalidGameError when the feasible set is empty and
// NumericError when no bisection bracket exists.
Vector project(const Vector& point, const WeightVector& weights,
               const SumConstrainedSet& set, double tol = 1e-12);

// The multiplier lambda of the budget-binding case: sum_k clamp(point_k +
// lambda / w_k) equals the budget within tol * max(1, |budget|).
double budget_multiplier(const Vector& point, const WeightVector& weights,
                         const SumConstrainedSet& set, double tol = 1e-12);

}  // namespace acscg

#endif  // ACSCG_PROJECTION_HPP
