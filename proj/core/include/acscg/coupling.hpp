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

#ifndef ACSCG_COUPLING_HPP
#define ACSCG_COUPLING_HPP

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "acscg/types.hpp"

namespace acscg {

// Same-dimension linear coupling: f_n^k(a_{-n}) = sum_{m != n} F_k(m, n) a(m, k).
// Diagonals of the F slices are ignored.
struct LinearCoupling {
  std::vector<Matrix> F;  // K slices, each N x N; (m, n) = effect of m on n

  int players() const { return F.empty() ? 0 : static_cast<int>(F[0].rows()); }
  int dims() const { return static_cast<int>(F.size()); }
};

// Cross-dimension affine coupling:
// f_n^k(a_{-n}) = sum_{m != n} sum_j G(m, n, k, j) a(m, j).
struct AffineCoupling {
  int N = 0;
  int K = 0;
  std::vector<double> G;  // dense (m, n, k, j), row-major in that order

  AffineCoupling() = default;
  AffineCoupling(int players, int dims)
      : N(players), K(dims),
        G(static_cast<std::size_t>(players) * players * dims * dims, 0.0) {}

  double& at(int m, int n, int k, int j) {
    return G[((static_cast<std::size_t>(m) * N + n) * K + k) * K + j];
  }
  double at(int m, int n, int k, int j) const {
    return G[((static_cast<std::size_t>(m) * N + n) * K + k) * K + j];
  }
};

// Arbitrary differentiable coupling given as handles over the full profile
// (the callee reads only rows m != n). `jacobian` returns
// d f_n^k / d a(m, j) and may be empty when no derivatives are available.
struct GeneralCoupling {
  std::function<double(int n, int k, const Matrix& a)> value;
  std::function<double(int n, int k, int m, int j, const Matrix& a)> jacobian;
};

class Coupling {
 public:
  Coupling() = default;
  Coupling(LinearCoupling c) : impl_(std::move(c)) {}   // NOLINT
  Coupling(AffineCoupling c) : impl_(std::move(c)) {}   // NOLINT
  Coupling(GeneralCoupling c) : impl_(std::move(c)) {}  // NOLINT

  static Coupling zero(int players, int dims);

  // f_n^k(a_{-n})
  double value(int n, int k, const Matrix& a) const;
  // d f_n^k / d a(m, j); exact for linear/affine, handle-backed otherwise.
  double jacobian(int n, int k, int m, int j, const Matrix& a) const;
  bool has_jacobian() const;

  bool is_linear() const { return std::holds_alternative<LinearCoupling>(impl_); }
  bool is_affine() const { return std::holds_alternative<AffineCoupling>(impl_); }
  bool is_general() const { return std::holds_alternative<GeneralCoupling>(impl_); }

  const LinearCoupling* linear() const { return std::get_if<LinearCoupling>(&impl_); }
  const AffineCoupling* affine() const { return std::get_if<AffineCoupling>(&impl_); }
  const GeneralCoupling* general() const { return std::get_if<GeneralCoupling>(&impl_); }

  // Exact embedding of the per-dimension linear form as a (k, j)-diagonal
  // affine tensor. Throws UnsupportedError for general couplings.
  AffineCoupling to_affine(int players, int dims) const;

 private:
  std::variant<LinearCoupling, AffineCoupling, GeneralCoupling> impl_;
};

}  // namespace acscg

#endif  // ACSCG_COUPLING_HPP
