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

#pragma once

#include "matmoments/field.hpp"

namespace matmoments {

// Log of the multivariate Gamma function.
//
// Real field:    Gamma_p(a)     = pi^(p(p-1)/4) prod_{i=1}^p Gamma(a - (i-1)/2),
//                requires a > (p-1)/2.
// Complex field: Gamma_p^(2)(a) = pi^(p(p-1)/2) prod_{i=1}^p Gamma(a - i + 1),
//                requires a > p - 1.
//
// Everything is evaluated in log space: the moment-space volumes built from
// these functions underflow double precision already at desk scale.
double log_multivariate_gamma(int p, double a, Field field);

// Log of the multivariate Beta function
// B_p(a, b) = Gamma_p(a) Gamma_p(b) / Gamma_p(a + b), per field.
double log_multivariate_beta(int p, double a, double b, Field field);

}  // namespace matmoments
