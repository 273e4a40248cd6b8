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

#ifndef ACSCG_ERRORS_HPP
#define ACSCG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace acscg {

// A utility kernel was evaluated (or differentiated) outside its domain, or
// a player has no feasible action with finite utility.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A numeric procedure failed: bisection bracket not found, iteration cap
// reached without meeting tolerance, singular linear system.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was invoked on a game variant it does not support
// (e.g. a closed-form water-fill on non-power-family kernels).
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what)
      : std::runtime_error(what) {}
};

// Malformed game data: invariant violations, empty feasible sets,
// inconsistent array sizes, parse failures.
class InvalidGameError : public std::runtime_error {
 public:
  explicit InvalidGameError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace acscg

#endif  // ACSCG_ERRORS_HPP
