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

#include "acscg/penalty.hpp"

#include <cmath>
#include <limits>

namespace acscg {

namespace {

double log_arg(const LogAffinePenalty& p, int n, int k, const Matrix& a) {
  double s = p.sigma(n, k);
  for (int m = 0; m < a.rows(); ++m) {
    if (m == n) continue;
    for (int j = 0; j < p.K; ++j) s += p.at(m, n, k, j) * a(m, j);
  }
  return s;
}

}  // namespace

double Penalty::value(int n, int k, const Matrix& a) const {
  if (std::holds_alternative<ZeroPenalty>(impl_)) return 0.0;
  if (const auto* p = std::get_if<LogAffinePenalty>(&impl_)) {
    const double u = log_arg(*p, n, k, a);
    if (u <= 0.0) return -std::numeric_limits<double>::infinity();
    return p->scale * std::log(u);
  }
  return std::get<GenericPenalty>(impl_).value(n, k, a);
}

double Penalty::gradient(int n, int k, int m, int j, const Matrix& a) const {
  if (m == n) return 0.0;
  if (std::holds_alternative<ZeroPenalty>(impl_)) return 0.0;
  if (const auto* p = std::get_if<LogAffinePenalty>(&impl_)) {
    return p->scale * p->at(m, n, k, j) / log_arg(*p, n, k, a);
  }
  return std::get<GenericPenalty>(impl_).gradient(n, k, m, j, a);
}

}  // namespace acscg
