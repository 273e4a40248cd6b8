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

#ifndef ACSCG_PENALTY_HPP
#define ACSCG_PENALTY_HPP

#include <functional>
#include <variant>
#include <vector>

#include "acscg/types.hpp"

namespace acscg {

struct ZeroPenalty {};

// g_n^k(a_{-n}) = scale * log(sigma(n, k) + sum_{m != n} sum_j C(m, n, k, j) a(m, j)).
// Covers the interference-style penalties of the catalog games and keeps
// them serializable. -inf when the log argument is non-positive.
struct LogAffinePenalty {
  int N = 0;
  int K = 0;
  Matrix sigma;           // N x K offsets
  std::vector<double> C;  // dense (m, n, k, j) coefficients
  double scale = 1.0;

  LogAffinePenalty() = default;
  LogAffinePenalty(int players, int dims)
      : N(players), K(dims), sigma(Matrix::Zero(players, dims)),
        C(static_cast<std::size_t>(players) * players * dims * dims, 0.0) {}

  double& at(int m, int n, int k, int j) {
    return C[((static_cast<std::size_t>(m) * N + n) * K + k) * K + j];
  }
  double at(int m, int n, int k, int j) const {
    return C[((static_cast<std::size_t>(m) * N + n) * K + k) * K + j];
  }
};

// Arbitrary penalty given as handles; `gradient` returns d g_n^k / d a(m, j).
// `declared_lipschitz` (when >= 0) certifies a gradient Lipschitz constant;
// otherwise the constant is estimated by sampling.
struct GenericPenalty {
  std::function<double(int n, int k, const Matrix& a)> value;
  std::function<double(int n, int k, int m, int j, const Matrix& a)> gradient;
  double declared_lipschitz = -1.0;
};

class Penalty {
 public:
  Penalty() : impl_(ZeroPenalty{}) {}
  Penalty(ZeroPenalty p) : impl_(p) {}                  // NOLINT
  Penalty(LogAffinePenalty p) : impl_(std::move(p)) {}  // NOLINT
  Penalty(GenericPenalty p) : impl_(std::move(p)) {}    // NOLINT

  double value(int n, int k, const Matrix& a) const;
  double gradient(int n, int k, int m, int j, const Matrix& a) const;

  bool is_zero() const { return std::holds_alternative<ZeroPenalty>(impl_); }
  const LogAffinePenalty* log_affine() const {
    return std::get_if<LogAffinePenalty>(&impl_);
  }
  const GenericPenalty* generic() const {
    return std::get_if<GenericPenalty>(&impl_);
  }

 private:
  std::variant<ZeroPenalty, LogAffinePenalty, GenericPenalty> impl_;
};

}  // namespace acscg

#endif  // ACSCG_PENALTY_HPP
