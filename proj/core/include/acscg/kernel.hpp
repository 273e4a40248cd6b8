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

#ifndef ACSCG_KERNEL_HPP
#define ACSCG_KERNEL_HPP

#include <functional>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "acscg/errors.hpp"

namespace acscg {

// Power/log utility family indexed by a negative exponent theta:
//
//   h(x) = scale * log(alpha + f_self * x)                      theta == -1
//   h(x) = scale * (alpha + f_self * x)^(theta+1) / (theta+1)   otherwise
//
// with f_self > 0, scale > 0. theta = -1 gives proportionally fair (log)
// utilities, theta = -2 harmonic-mean (negative inverse) utilities. Values
// are -inf when alpha + f_self * x <= 0. `scale` accommodates kernels stated
// in other log bases (log2 rates use scale = 1/ln 2); it rescales utility
// units only and leaves the best-response operator unchanged.
struct ThetaKernel {
  double theta = -1.0;
  double alpha = 0.0;
  double f_self = 1.0;
  double scale = 1.0;
};

// Arbitrary increasing strictly concave kernel supplied as handles. The
// inverse-derivative handle must return +inf when the target is at or below
// the infimum of h' and -inf when it is at or above the supremum, mirroring
// the clamp behavior of the closed forms.
struct GenericKernel {
  std::function<double(double)> value;
  std::function<double(double)> deriv;
  std::function<double(double)> second;
  std::function<double(double)> inv_deriv;
};

class UtilityKernel {
 public:
  UtilityKernel() : impl_(ThetaKernel{}) {}
  UtilityKernel(ThetaKernel k);        // NOLINT(google-explicit-constructor)
  UtilityKernel(GenericKernel k);      // NOLINT(google-explicit-constructor)

  // h(x); -inf outside the domain.
  double value(double x) const;
  // h'(x) > 0; throws DomainError outside the domain.
  double deriv(double x) const;
  // h''(x) < 0; throws DomainError outside the domain.
  double second(double x) const;
  // x with h'(x) = y; +inf / -inf when y lies outside the range of h'.
  double inv_deriv(double y) const;

  bool is_theta() const { return std::holds_alternative<ThetaKernel>(impl_); }
  const ThetaKernel* theta() const { return std::get_if<ThetaKernel>(&impl_); }

  // Lower edge of the kernel domain (-inf when unrestricted).
  double domain_min() const;

  // Diagnostics for malformed parameters; empty when well formed.
  std::vector<std::string> validate() const;

 private:
  std::variant<ThetaKernel, GenericKernel> impl_;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace acscg

#endif  // ACSCG_KERNEL_HPP
