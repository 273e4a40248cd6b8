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

#include "acscg/game.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "acscg/errors.hpp"

namespace acscg {

namespace {

void check_player_index(const GameSpec& game, int n) {
  if (n < 0 || n >= game.num_players) {
    std::ostringstream os;
    os << "player index " << n << " out of range [0, " << game.num_players
       << ")";
    throw std::out_of_range(os.str());
  }
}

}  // namespace

double kernel_argument(const GameSpec& game, const ActionProfile& profile,
                       int n, int k) {
  return profile.a(n, k) + game.coupling.value(n, k, profile.a);
}

double utility(const GameSpec& game, const ActionProfile& profile, int n) {
  check_player_index(game, n);
  if (!feasible(game, profile)) {
    std::ostringstream os;
    os << "profile infeasible: ";
    for (int m = 0; m < game.num_players; ++m) {
      const Vector x = profile.row(m);
      const auto& set = game.set(m);
      if (!set.contains(x)) {
        os << "player " << m << " violates its action set (sum=" << x.sum()
           << ", budget=" << set.budget << "); ";
      }
    }
    throw InvalidGameError(os.str());
  }
  double total = 0.0;
  for (int k = 0; k < game.num_dims; ++k) {
    const double h = game.kernel(n, k).value(kernel_argument(game, profile, n, k));
    if (std::isinf(h) && h < 0.0) return -kInf;
    total += h - game.penalty.value(n, k, profile.a);
  }
  return total;
}

Vector own_gradient(const GameSpec& game, const ActionProfile& profile, int n) {
  check_player_index(game, n);
  Vector grad(game.num_dims);
  for (int k = 0; k < game.num_dims; ++k) {
    const double x = kernel_argument(game, profile, n, k);
    try {
      grad[k] = game.kernel(n, k).deriv(x);
    } catch (const DomainError& e) {
      std::ostringstream os;
      os << "player " << n << ", dimension " << k << ": " << e.what();
      throw DomainError(os.str());
    }
  }
  return grad;
}

bool feasible(const GameSpec& game, const ActionProfile& profile, double tol) {
  if (profile.players() != game.num_players || profile.dims() != game.num_dims)
    return false;
  for (int n = 0; n < game.num_players; ++n) {
    if (!game.set(n).contains(profile.row(n), tol)) return false;
  }
  return true;
}

namespace {

// Interval bounds of f_n^k over the feasible box (budget relaxed); exact for
// linear/affine coupling, used by the domain diagnostics below.
bool coupling_range(const GameSpec& game, int n, int k, double* lo, double* hi) {
  *lo = 0.0;
  *hi = 0.0;
  if (game.coupling.is_general()) return false;
  for (int m = 0; m < game.num_players; ++m) {
    if (m == n) continue;
    for (int j = 0; j < game.num_dims; ++j) {
      Matrix dummy = Matrix::Zero(game.num_players, game.num_dims);
      const double c = game.coupling.jacobian(n, k, m, j, dummy);
      const double a = c * game.set(m).lower[j];
      const double b = c * game.set(m).upper[j];
      *lo += std::min(a, b);
      *hi += std::max(a, b);
    }
  }
  return true;
}

}  // namespace

std::vector<std::string> validate(const GameSpec& game) {
  std::vector<std::string> issues;
  auto note = [&issues](int n, const std::string& msg) {
    std::ostringstream os;
    os << "player " << n << ": " << msg;
    issues.push_back(os.str());
  };

  if (game.num_players <= 0) issues.push_back("player count must be positive");
  if (game.num_dims <= 0) issues.push_back("dimension count must be positive");
  if (static_cast<int>(game.sets.size()) != game.num_players)
    issues.push_back("action-set array size differs from the player count");
  if (static_cast<int>(game.kernels.size()) != game.num_players)
    issues.push_back("kernel array size differs from the player count");
  if (!issues.empty()) return issues;

  for (int n = 0; n < game.num_players; ++n) {
    if (game.set(n).dim() != game.num_dims) {
      note(n, "action set dimension differs from the game dimension");
      continue;
    }
    for (const auto& msg : game.set(n).validate()) note(n, msg);
    if (static_cast<int>(game.kernels[static_cast<size_t>(n)].size()) !=
        game.num_dims) {
      note(n, "kernel row size differs from the game dimension");
      continue;
    }
    for (int k = 0; k < game.num_dims; ++k) {
      for (const auto& msg : game.kernel(n, k).validate()) {
        std::ostringstream os;
        os << "kernel (" << n << ", " << k << "): " << msg;
        issues.push_back(os.str());
      }
    }
  }

  // A2 footnote check: some own action must keep every kernel argument in
  // domain whatever the opponents play. Certified via interval bounds on f
  // for linear/affine coupling.
  for (int n = 0; n < game.num_players; ++n) {
    for (int k = 0; k < game.num_dims; ++k) {
      double lo, hi;
      if (!coupling_range(game, n, k, &lo, &hi)) continue;
      const double edge = game.kernel(n, k).domain_min();
      if (game.set(n).upper[k] + lo <= edge) {
        std::ostringstream os;
        os << "kernel (" << n << ", " << k
           << ") unreachable: even the largest own action leaves the "
              "argument at or below its domain edge "
           << edge;
        issues.push_back(os.str());
      }
    }
  }
  return issues;
}

}  // namespace acscg
