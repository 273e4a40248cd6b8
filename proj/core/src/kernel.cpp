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

#include "acscg/kernel.hpp"

#include <cmath>
#include <sstream>

namespace acscg {

namespace {

// alpha + f_self * x, the shifted argument the theta family acts on.
inline double shifted(const ThetaKernel& k, double x) {
  return k.alpha + k.f_self * x;
}

}  // namespace

UtilityKernel::UtilityKernel(ThetaKernel k) : impl_(k) {}
UtilityKernel::UtilityKernel(GenericKernel k) : impl_(std::move(k)) {}

double UtilityKernel::value(double x) const {
  if (const auto* t = std::get_if<ThetaKernel>(&impl_)) {
    const double u = shifted(*t, x);
    if (u <= 0.0) return -kInf;
    if (t->theta == -1.0) return t->scale * std::log(u);
    return t->scale * std::pow(u, t->theta + 1.0) / (t->theta + 1.0);
  }
  return std::get<GenericKernel>(impl_).value(x);
}

double UtilityKernel::deriv(double x) const {
  if (const auto* t = std::get_if<ThetaKernel>(&impl_)) {
    const double u = shifted(*t, x);
    if (u <= 0.0) {
      std::ostringstream os;
      os << "kernel derivative at x = " << x << ": argument "
         << u << " outside domain";
      throw DomainError(os.str());
    }
    return t->scale * t->f_self * std::pow(u, t->theta);
  }
  return std::get<GenericKernel>(impl_).deriv(x);
}

double UtilityKernel::second(double x) const {
  if (const auto* t = std::get_if<ThetaKernel>(&impl_)) {
    const double u = shifted(*t, x);
    if (u <= 0.0) {
      std::ostringstream os;
      os << "kernel second derivative at x = " << x << ": argument "
         << u << " outside domain";
      throw DomainError(os.str());
    }
    return t->scale * t->theta * t->f_self * t->f_self *
           std::pow(u, t->theta - 1.0);
  }
  return std::get<GenericKernel>(impl_).second(x);
}

double UtilityKernel::inv_deriv(double y) const {
  if (const auto* t = std::get_if<ThetaKernel>(&impl_)) {
    // h' decreases from +inf (domain edge) to 0; targets at or below 0 have
    // no preimage and resolve to +inf so the clamp lands on the upper bound.
    if (y <= 0.0) return kInf;
    const double u = std::pow(y / (t->scale * t->f_self), 1.0 / t->theta);
    return (u - t->alpha) / t->f_self;
  }
  return std::get<GenericKernel>(impl_).inv_deriv(y);
}

double UtilityKernel::domain_min() const {
  if (const auto* t = std::get_if<ThetaKernel>(&impl_)) {
    return -t->alpha / t->f_self;
  }
  return -kInf;
}

std::vector<std::string> UtilityKernel::validate() const {
  std::vector<std::string> issues;
  if (const auto* t = std::get_if<ThetaKernel>(&impl_)) {
    if (!(t->theta < 0.0)) issues.push_back("theta must be negative");
    if (!(t->f_self > 0.0)) issues.push_back("f_self must be positive");
    if (!(t->scale > 0.0)) issues.push_back("scale must be positive");
  } else {
    const auto& g = std::get<GenericKernel>(impl_);
    if (!g.value || !g.deriv || !g.second || !g.inv_deriv) {
      issues.push_back(
          "generic kernel must supply value, deriv, second, and inv_deriv");
    }
  }
  return issues;
}

}  // namespace acscg
