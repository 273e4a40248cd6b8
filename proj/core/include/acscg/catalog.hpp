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

#ifndef ACSCG_CATALOG_HPP
#define ACSCG_CATALOG_HPP

#include <cstdint>
#include <vector>

#include "acscg/game.hpp"

namespace acscg {

// Two players, two dimensions, kernels -e^{-x}, and the radially coupled
//   f_n^1 = sqrt((a_o^1)^2 + 1) - sqrt((a_o^2)^2 + 1),   f_n^2 = -f_n^1
// (o = the other player). Budgets m1, m2 with coordinates in [0, budget].
// The nonlinear coupling makes the convergence certificates budget-dependent.
GameSpec make_example1(double m1, double m2);

// Gaussian interference channel power allocation. gain(m, n, k) is the
// channel gain from transmitter m to receiver n in bin k, noise(n, k) the
// receiver noise floor, power_budget(n) the transmit power cap. Utilities
// are the log2 achievable rates with interference treated as noise.
struct PowerSpec {
  int N = 0;
  int K = 0;
  std::vector<Matrix> gain;   // K slices, each N x N: (m, n) = H_mn^k
  Matrix noise;               // N x K
  Vector power_budget;        // N
  Matrix mask_upper;          // N x K per-bin caps; empty = budget caps

  double gain_at(int m, int n, int k) const { return gain[static_cast<size_t>(k)](m, n); }
  std::vector<std::string> validate() const;
};
GameSpec make_power_control(const PowerSpec& spec);

// Spectral leakage coefficient between bins j apart out of K (K even):
// 1 at j = 0, else 2 / (K^2 sin^2(pi j / K)), extended circularly and
// symmetrically.
double gamma_ici(int j, int K);

// Power allocation with inter-carrier interference: leakage gamma(k - j)
// couples every pair of bins, giving an affine cross-dimension coupling and
// the matching log2 interference penalty.
GameSpec make_ici(const PowerSpec& spec);

// Multi-class open network of exponential servers with Markovian routing.
// routing[k](m, n) is the probability a class-k job leaving node m is routed
// to node n; exit(m, k) the leave probability; service(n, k) the service
// rates; rate_min(n) the committed total input rate of node n; rate_cap(n,k)
// per-class input caps keeping every queue stable on the whole feasible box.
struct JacksonSpec {
  int N = 0;
  int K = 0;
  std::vector<Matrix> routing;  // K slices, each N x N
  Matrix exit;                  // N x K
  Matrix service;               // N x K (mu)
  Vector rate_min;              // N (psi_min)
  Matrix rate_cap;              // N x K

  std::vector<std::string> validate() const;

  // Per-class routing-propagation matrix: entry (m, n) = routing[k](n, m).
  Matrix propagation(int k) const;
  // (I - R^k)^{-1} by dense partial-pivot elimination; throws NumericError
  // when rho(R^k) >= 1.
  Matrix gain_matrix(int k) const;
  // Total arrival rates for class k at input rates psi (column of N);
  // computed through the gain matrix.
  Vector arrivals(int k, const Vector& psi) const;
};

// The delay-minimization game over a Jackson network: actions are negated
// input rates (so the minimum-rate commitment becomes a sum budget), kernels
// are the theta = -2 negative-inverse delays, coupling coefficients are the
// routing-gain ratios (always >= 0: strategic substitutes).
GameSpec make_jackson(const JacksonSpec& spec);

// Random network: routing mass 1 - exit_prob split uniformly at random over
// destinations (exponential-normalization simplex draw; self-routing
// included when allow_self_routing), service rates uniform in [4, 5],
// committed rates uniform in [0.6, 1]. Rate caps are the largest uniform cap
// keeping worst-case total arrivals at 95% of the slowest server.
// Deterministic in (seed); throws NumericError when no feasible instance is
// found in 100 attempts.
JacksonSpec random_jackson(int N, int K, double exit_prob, std::uint64_t seed,
                           bool allow_self_routing = true);

// Random interference channel: unit direct gains, cross gains
// cross_scale * U(0,1), unit noise floors, power budgets uniform in
// [0.5 K, K]. With `ici`, the same draw is used for the leakage game.
PowerSpec random_power_spec(int N, int K, double cross_scale,
                            std::uint64_t seed);

}  // namespace acscg

#endif  // ACSCG_CATALOG_HPP
