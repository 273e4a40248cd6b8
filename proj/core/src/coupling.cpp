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

#include "acscg/coupling.hpp"

#include "acscg/errors.hpp"

namespace acscg {

Coupling Coupling::zero(int players, int dims) {
  LinearCoupling c;
  c.F.assign(static_cast<std::size_t>(dims), Matrix::Zero(players, players));
  return Coupling(std::move(c));
}

double Coupling::value(int n, int k, const Matrix& a) const {
  if (const auto* lin = std::get_if<LinearCoupling>(&impl_)) {
    const Matrix& F = lin->F[static_cast<std::size_t>(k)];
    double s = 0.0;
    for (int m = 0; m < a.rows(); ++m) {
      if (m != n) s += F(m, n) * a(m, k);
    }
    return s;
  }
  if (const auto* aff = std::get_if<AffineCoupling>(&impl_)) {
    double s = 0.0;
    for (int m = 0; m < a.rows(); ++m) {
      if (m == n) continue;
      for (int j = 0; j < aff->K; ++j) s += aff->at(m, n, k, j) * a(m, j);
    }
    return s;
  }
  return std::get<GeneralCoupling>(impl_).value(n, k, a);
}

double Coupling::jacobian(int n, int k, int m, int j, const Matrix& a) const {
  if (m == n) return 0.0;
  if (const auto* lin = std::get_if<LinearCoupling>(&impl_)) {
    return j == k ? lin->F[static_cast<std::size_t>(k)](m, n) : 0.0;
  }
  if (const auto* aff = std::get_if<AffineCoupling>(&impl_)) {
    return aff->at(m, n, k, j);
  }
  const auto& gen = std::get<GeneralCoupling>(impl_);
  if (!gen.jacobian) {
    throw UnsupportedError("general coupling supplies no jacobian handle");
  }
  return gen.jacobian(n, k, m, j, a);
}

bool Coupling::has_jacobian() const {
  if (const auto* gen = std::get_if<GeneralCoupling>(&impl_)) {
    return static_cast<bool>(gen->jacobian);
  }
  return true;
}

AffineCoupling Coupling::to_affine(int players, int dims) const {
  if (const auto* aff = std::get_if<AffineCoupling>(&impl_)) return *aff;
  const auto* lin = std::get_if<LinearCoupling>(&impl_);
  if (!lin) {
    throw UnsupportedError("general coupling has no affine representation");
  }
  AffineCoupling out(players, dims);
  for (int k = 0; k < dims; ++k) {
    const Matrix& F = lin->F[static_cast<std::size_t>(k)];
    for (int m = 0; m < players; ++m) {
      for (int n = 0; n < players; ++n) {
        if (m != n) out.at(m, n, k, k) = F(m, n);
      }
    }
  }
  return out;
}

}  // namespace acscg
