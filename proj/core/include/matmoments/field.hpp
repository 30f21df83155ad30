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

#include <string>

#include "matmoments/errors.hpp"

namespace matmoments {

// Scalar field of the matrix entries. Real selects symmetric matrices and
// orthogonal-ensemble limits, Complex selects hermitian matrices and
// unitary-ensemble limits.
enum class Field { kReal, kComplex };

// Dyson index of the field: 1 for real symmetric, 2 for complex hermitian.
constexpr int beta_index(Field field) {
  return field == Field::kReal ? 1 : 2;
}

inline std::string field_name(Field field) {
  return field == Field::kReal ? "real" : "complex";
}

inline Field field_from_name(const std::string& name) {
  if (name == "real") return Field::kReal;
  if (name == "complex") return Field::kComplex;
  throw ConfigError("unknown field name: " + name);
}

}  // namespace matmoments
