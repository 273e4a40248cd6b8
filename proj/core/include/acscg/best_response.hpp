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

#ifndef ACSCG_BEST_RESPONSE_HPP
#define ACSCG_BEST_RESPONSE_HPP

#include <cstdint>
#include <vector>

#include "acscg/game.hpp"

namespace acscg {

enum class Schedule { kSequential, kParallel };

struct DynamicsConfig {
  Schedule schedule = Schedule::kParallel;
  double tol = 1e-8;
  int max_iter = 10000;
  std::uint64_t seed = 0;
};

// One dynamics run. Stage 0 is the initial profile. residual(t, n) is the
// positive-part residual e_n^t = sum_k [a(n,k,t) - a(n,k,t-1)]^+ (zero at
// stage 0); because best responses pin the budget, the full 1-norm step of a
// player equals twice this value. multiplier(t, n) is the water level
// lambda_n^t of stage t's best response (zero for stage 0 and for gradient
// steps, which have no single water level).
struct Trajectory {
  std::vector<ActionProfile> profiles;
  Matrix utilities;          // (stages+1) x N
  Matrix residuals;          // (stages+1) x N, positive-part residuals
  Matrix multipliers;        // (stages+1) x N
  Vector sum_utilities;      // per stage
  Vector kkt_stationarity;   // per stage; only filled by pricing runs
  bool converged = false;
  int iterations = 0;
  Schedule schedule = Schedule::kParallel;

  int stages() const { return static_cast<int>(profiles.size()); }
  const ActionProfile& final_profile() const { return profiles.back(); }
};

struct BestResponseResult {
  Vector action;      // K-vector
  double multiplier;  // water level lambda*
};

// Player n's utility-maximizing action against a_{-n}: coordinate k takes
// the clamped value [ (h_n^k')^{-1}(lambda) - f_n^k(a_{-n}) ] with lambda
// chosen by monotone bisection so that the coordinates sum to
// min(budget, sum of upper bounds). Throws DomainError when no own action
// attains finite utility and NumericError on bracket failure.
BestResponseResult best_response(const GameSpec& game, int n,
                                 const ActionProfile& profile);

// Closed-form best response for players whose kernels all belong to the
// theta family: coordinate k is
// [ (1/f_self)^(1+1/theta) (lambda/scale)^(1/theta) - alpha/f_self - f_n^k ]
// clamped to the box, with the same lambda bisection. Must agree with
// best_response() to 1e-8. Throws UnsupportedError on other kernels.
BestResponseResult water_fill_theta(const GameSpec& game, int n,
                                    const ActionProfile& profile);

// Iterates best responses in the configured order until the largest
// per-player 1-norm step falls to config.tol or max_iter is reached.
// Parallel stages evaluate all players against the committed previous
// profile (concurrently; results are committed per stage); the sequential
// schedule sweeps players in index order within each stage.
Trajectory run_dynamics(const GameSpec& game, const ActionProfile& init,
                        const DynamicsConfig& config);

// Element-wise residual contraction check for per-dimension linear coupling:
// at every stage, e_n^{t+1} <= sum_{m != n} c * max_k |F(m,n,k)| * e_m^t
// (+ slack), with c = 2 in general and c = 1 when the coupling is
// sign-uniform and `sharp` is set. Sequential trajectories use the
// already-updated residual e_m^{t+1} for players m < n, matching the order
// in which their actions entered the stage. Throws UnsupportedError for
// non-linear coupling.
struct ContractionViolation {
  int stage;
  int player;
  double lhs;
  double rhs;
};
struct ContractionReport {
  std::vector<ContractionViolation> violations;
  int stages_checked = 0;
  bool ok() const { return violations.empty(); }
};
ContractionReport contraction_check(const GameSpec& game,
                                    const Trajectory& trajectory,
                                    double slack = 1e-9, bool sharp = false);

}  // namespace acscg

#endif  // ACSCG_BEST_RESPONSE_HPP
