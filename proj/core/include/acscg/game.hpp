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

#ifndef ACSCG_GAME_HPP
#define ACSCG_GAME_HPP

#include <map>
#include <string>
#include <vector>

#include "acscg/coupling.hpp"
#include "acscg/kernel.hpp"
#include "acscg/penalty.hpp"
#include "acscg/types.hpp"

namespace acscg {

// A sum-constrained game instance. Player n's utility is
//
//   u_n(a) = sum_k [ h_n^k(a(n,k) + f_n^k(a_{-n})) - g_n^k(a_{-n}) ]
//
// with increasing strictly concave kernels h, coupling f, penalties g, and
// action sets given by per-player boxes with a budget on the coordinate sum.
// Instances are immutable values after construction; every operation on them
// is a pure function and safe to call concurrently.
struct GameSpec {
  int num_players = 0;
  int num_dims = 0;
  std::vector<SumConstrainedSet> sets;                // [n]
  std::vector<std::vector<UtilityKernel>> kernels;    // [n][k]
  Coupling coupling;
  Penalty penalty;

  // True when every g_n^k depends on a_{-n} only through the per-dimension
  // aggregate sum_{m != n} F(m,n,k) a(m,k); enables O(NK) price signaling.
  bool aggregate_coupling = false;

  std::string name;
  std::map<std::string, std::string> metadata;  // units, provenance, params

  const SumConstrainedSet& set(int n) const { return sets[static_cast<size_t>(n)]; }
  const UtilityKernel& kernel(int n, int k) const {
    return kernels[static_cast<size_t>(n)][static_cast<size_t>(k)];
  }
};

// h-argument a(n,k) + f_n^k(a_{-n}).
double kernel_argument(const GameSpec& game, const ActionProfile& profile,
                       int n, int k);

// u_n(a). -inf propagates when a kernel argument leaves its domain. Throws
// InvalidGameError on an infeasible profile and std::out_of_range on a bad
// player index.
double utility(const GameSpec& game, const ActionProfile& profile, int n);

// Gradient of u_n with respect to player n's own action; component k is
// h_n^k'(a(n,k) + f_n^k(a_{-n})). Penalties do not depend on the own action
// and never contribute. Throws DomainError naming (n, k) when a kernel
// argument is out of domain.
Vector own_gradient(const GameSpec& game, const ActionProfile& profile, int n);

// Feasibility of every player's row at absolute tolerance `tol`.
bool feasible(const GameSpec& game, const ActionProfile& profile,
              double tol = kFeasibilityTol);

// List of violated invariants; empty when the instance is well formed.
// Diagnostics, not exceptions.
std::vector<std::string> validate(const GameSpec& game);

}  // namespace acscg

#endif  // ACSCG_GAME_HPP
