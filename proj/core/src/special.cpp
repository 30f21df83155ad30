// Copyright 2026 The matmoments Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matmoments/special.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace matmoments {

double log_multivariate_gamma(int p, double a, Field field) {
  if (p < 1) {
    throw DomainError("multivariate gamma needs p >= 1");
  }
  const double limit =
      field == Field::kReal ? 0.5 * (p - 1) : static_cast<double>(p - 1);
  if (!(a > limit)) {
    throw DomainError("multivariate gamma argument a=" + std::to_string(a) +
                      " out of domain for p=" + std::to_string(p));
  }
  const double log_pi = std::log(std::numbers::pi);
  double result;
  if (field == Field::kReal) {
    result = 0.25 * p * (p - 1) * log_pi;
    for (int i = 1; i <= p; ++i) {
      result += std::lgamma(a - 0.5 * (i - 1));
    }
  } else {
    result = 0.5 * p * (p - 1) * log_pi;
    for (int i = 1; i <= p; ++i) {
      result += std::lgamma(a - (i - 1));
    }
  }
  return result;
}

double log_multivariate_beta(int p, double a, double b, Field field) {
  return log_multivariate_gamma(p, a, field) +
         log_multivariate_gamma(p, b, field) -
         log_multivariate_gamma(p, a + b, field);
}

}  // namespace matmoments
