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

#ifndef ACSCG_CONDITIONS_HPP
#define ACSCG_CONDITIONS_HPP

#include <optional>
#include <string>

#include "acscg/game.hpp"

namespace acscg {

// Default number of quasi-random profiles when a supremum over the joint
// action set has to be sampled (general couplings only).
inline constexpr int kDefaultSupSamples = 8192;

// Coupling-strength matrix for per-dimension linear coupling:
// entry (m, n) = max_k |F(m, n, k)|, zero diagonal.
Matrix build_t_max(const Coupling& coupling);

// Preference-weighted coupling matrix for theta-family kernels over linear
// coupling; entry (m, n) =
//   (sum_k S_m^k / sum_k S_n^k) * max_k { |F(m,n,k)| * S_n^k / S_m^k }
// with S_n^k = f_self(n,k)^(1 + 1/theta). Coincides with build_t_max when
// theta = -1.
Matrix build_s_max(const GameSpec& game);

struct BoundedMatrix {
  Matrix value;
  // False when the supremum over the action set was estimated by sampling
  // (then `value` is a lower bound of the true supremum).
  bool certified = true;
};

// Worst-case derivative mass for differentiable coupling; entry (m, n) =
// sup_{a} max_j sum_k |d f_n^k / d a(m, j)|. Exact for linear and affine
// couplings (constant derivatives); sampled at `sup_samples` quasi-random
// feasible profiles plus the feasible corners of player m's box otherwise.
BoundedMatrix build_t_bar_max(const GameSpec& game,
                              int sup_samples = kDefaultSupSamples);

// Preference-weighted version of build_t_bar_max for theta-family kernels;
// entry (m, n) = (sum_k S_m^k / sum_k S_n^k) *
//   sup_a max_j { sum_k |d f_n^k / d a(m, j)| * S_n^j / S_m^j }.
BoundedMatrix build_s_bar_max(const GameSpec& game,
                              int sup_samples = kDefaultSupSamples);

// Perron root of a non-negative matrix by power iteration on M + eps * ones
// (eps = 1e-12 keeps the iteration matrix primitive). The Collatz-Wielandt
// ratio bracket certifies the result within tol + N * eps.
double spectral_radius(const Matrix& m, double tol = 1e-10);

enum class SignStructure { kComplements, kSubstitutes, kMixed };
enum class ConditionStatus { kHolds, kFails, kNotApplicable };

// Curvature and smoothness data behind the gradient-play/Jacobi stepsize
// certificates: extreme kernel curvatures over the reachable argument
// ranges, the penalty-gradient Lipschitz constant L', and the total
// Lipschitz constant
//   L = sup|h''| * max_{k,l} sum_m sum_n |F(m,n,k) F(l,n,k)| + N K L'
// (own-action coefficient 1 inside the products; the affine analogue uses
// the full derivative tensor). inf_h2 = -inf flags an argument range that
// touches a kernel singularity, with the offending (player, dim).
struct CurvatureReport {
  double inf_h2 = 0.0;
  double sup_h2 = 0.0;
  double penalty_lipschitz = 0.0;
  double total_lipschitz = 0.0;
  bool certified = true;
  int singular_player = -1;
  int singular_dim = -1;
};
CurvatureReport curvature_and_lipschitz(const GameSpec& game,
                                        int sup_samples = kDefaultSupSamples);

// Applicability and satisfaction of the six best-response convergence
// certificates plus the curvature prerequisites of the pricing algorithms:
//   C1: rho(t_max) < 1/2          C4: rho(t_bar_max) < 1/2
//   C2: sign-uniform, rho(t_max) < 1     C5: sign-uniform, rho(t_bar_max) < 1
//   C3: theta family, rho(s_max) < 1     C6: theta family, rho(s_bar_max) < 1
//   C7: inf h'' > -inf and Lipschitz penalty gradients
//   C8: C7 and sup h'' < 0
struct ConditionReport {
  std::optional<Matrix> t_max, s_max, t_bar_max, s_bar_max;
  std::optional<double> rho_t_max, rho_s_max, rho_t_bar_max, rho_s_bar_max;
  SignStructure sign_structure = SignStructure::kMixed;
  bool theta_family = false;
  std::optional<double> zeta_max;
  ConditionStatus holds[8] = {
      ConditionStatus::kNotApplicable, ConditionStatus::kNotApplicable,
      ConditionStatus::kNotApplicable, ConditionStatus::kNotApplicable,
      ConditionStatus::kNotApplicable, ConditionStatus::kNotApplicable,
      ConditionStatus::kNotApplicable, ConditionStatus::kNotApplicable};
  bool bound_certified = true;
  CurvatureReport curvature;

  // 1-based accessor: condition(1) is C1.
  ConditionStatus condition(int i) const { return holds[i - 1]; }
  bool any_holds() const {
    for (auto s : holds)
      if (s == ConditionStatus::kHolds) return true;
    return false;
  }
};
ConditionReport check_conditions(const GameSpec& game,
                                 int sup_samples = kDefaultSupSamples);

// Upper bound on the preference-similarity factors:
// max_{m != n} [ max_k (r_nm^k) / min_k (r_nm^k) ] with
// r_nm^k = (f_self(n,k)/f_self(m,k))^(1+1/theta). Always >= 1; equals 1 at
// theta = -1. Requires theta-family kernels with a common theta.
double zeta_bound(const GameSpec& game);

// Certified bound 1/exit_prob - 1 on the spectral radius of a per-class
// routing-gain matrix of a work-conserving network whose nodes all exit
// with probability exit_prob.
double jackson_class_bound(double exit_prob);

const char* to_string(SignStructure s);
const char* to_string(ConditionStatus s);

}  // namespace acscg

#endif  // ACSCG_CONDITIONS_HPP
