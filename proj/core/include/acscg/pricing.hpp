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

#ifndef ACSCG_PRICING_HPP
#define ACSCG_PRICING_HPP

#include <vector>

#include "acscg/best_response.hpp"
#include "acscg/conditions.hpp"
#include "acscg/game.hpp"

namespace acscg {

// Externality prices pi(m, n, k) = -d u_m / d a(n, k) for m != n: the
// marginal utility loss of player m per unit increase of player n's k-th
// coordinate. Diagonal entries are identically zero.
struct PriceTensor {
  int N = 0;
  int K = 0;
  std::vector<double> pi;

  PriceTensor() = default;
  PriceTensor(int players, int dims)
      : N(players), K(dims),
        pi(static_cast<std::size_t>(players) * players * dims, 0.0) {}

  double& at(int m, int n, int k) {
    return pi[(static_cast<std::size_t>(m) * N + n) * K + k];
  }
  double at(int m, int n, int k) const {
    return pi[(static_cast<std::size_t>(m) * N + n) * K + k];
  }
  // sum_{m != n} pi(m, n, k): total charge on player n's k-th coordinate.
  double charge(int n, int k) const;
};

PriceTensor prices(const GameSpec& game, const ActionProfile& profile);

// O(NK) signaling for games whose penalties depend on opponents only through
// the per-dimension aggregates (game.aggregate_coupling): player m announces
// pi_m^k = -d u_m / d(aggregate_m^k), and pi(m, n, k) = F(n, m, k) pi_m^k
// reconstructs the full tensor. Throws UnsupportedError when the flag is
// not set.
Matrix reduced_prices(const GameSpec& game, const ActionProfile& profile);

// First-order optimality residuals of the sum-utility problem at `profile`.
// Multipliers are fitted: the budget multiplier is the median stationarity
// value over unclamped coordinates (when the budget binds), bound multipliers
// absorb the nonnegative part of the gap at clamped coordinates.
struct KktResiduals {
  double stationarity = 0.0;    // worst remaining gradient-balance violation
  double complementarity = 0.0; // worst multiplier * slack product
  double feasibility = 0.0;     // worst box/budget violation
};
KktResiduals kkt_residuals(const GameSpec& game, const ActionProfile& profile,
                           double tol = 1e-8);

// Simultaneous projected-gradient step: each player moves by kappa times its
// own gradient, minus the price charges when `priced`, then projects onto its
// action set in the Euclidean norm. All players step from the same input
// profile.
ActionProfile gradient_play_step(const GameSpec& game,
                                 const ActionProfile& profile, double kappa,
                                 bool priced);

// Equilibrium-seeking gradient projection without prices, with per-player
// stepsizes.
ActionProfile rosen_gradient_step(const GameSpec& game,
                                  const ActionProfile& profile,
                                  const Vector& kappa);

// Damped move toward the priced best response: each player solves
// max_{x in A_n} sum_k [ h_n^k(x_k + f_n^k) - x_k * charge(n, k) ] by the
// same water-level bisection as the plain best response (prices shift the
// per-coordinate stationarity targets), then a' = a + kappa (B' - a).
// kappa = 1 lands exactly on the priced best response.
ActionProfile jacobi_step(const GameSpec& game, const ActionProfile& profile,
                          double kappa);

enum class PricingAlgorithm { kGradientPlay, kJacobi, kRosen };

// Largest stepsize certified by the smoothness bounds, shaved by a 5%
// margin: gradient play gets 2/L, Jacobi min{(2/L) * (-max sup h''), 1}.
// Throws NumericError when the curvature report shows an unbounded kernel.
double safe_stepsize(const GameSpec& game, PricingAlgorithm algorithm,
                     int sup_samples = kDefaultSupSamples);

// Iterates the chosen step with prices recomputed each stage from the
// committed previous profile; all players update simultaneously. Records
// per-stage utilities, total utility, and KKT stationarity residuals. The
// Rosen mode broadcasts `kappa` to every player.
Trajectory run_pricing(const GameSpec& game, const ActionProfile& init,
                       PricingAlgorithm algorithm, double kappa,
                       const DynamicsConfig& config);

}  // namespace acscg

#endif  // ACSCG_PRICING_HPP
