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

#include "acscg/types.hpp"

#include <sstream>

#include "acscg/errors.hpp"

namespace acscg {

std::vector<std::string> SumConstrainedSet::validate() const {
  std::vector<std::string> issues;
  if (lower.size() != upper.size()) {
    issues.push_back("bound vectors have mismatched sizes");
    return issues;
  }
  for (int k = 0; k < dim(); ++k) {
    if (!(lower[k] <= upper[k])) {
      std::ostringstream os;
      os << "coordinate " << k << ": lower bound " << lower[k]
         << " exceeds upper bound " << upper[k];
      issues.push_back(os.str());
    }
  }
  if (upper.sum() < budget) {
    std::ostringstream os;
    os << "budget " << budget << " exceeds the sum of upper bounds "
       << upper.sum() << " (sum constraint unattainable)";
    issues.push_back(os.str());
  }
  if (lower.sum() > budget) {
    std::ostringstream os;
    os << "sum of lower bounds " << lower.sum() << " exceeds budget "
       << budget << " (feasible set empty)";
    issues.push_back(os.str());
  }
  return issues;
}

WeightVector::WeightVector(Vector weights) : w(std::move(weights)) {
  if ((w.array() <= 0.0).any()) {
    throw InvalidGameError("weight vector must be strictly positive");
  }
}

}  // namespace acscg
