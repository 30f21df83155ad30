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

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "matmoments/errors.hpp"
#include "matmoments/field.hpp"

namespace matmoments {

// A p x p symmetric (real field) or hermitian (complex field) matrix.
//
// This is the universal element type of the library: moments, canonical
// moments, ensemble draws and extremal bounds are all values of this type.
// The constructor checks the structural invariants (finiteness, conjugate
// symmetry, real diagonal) and then stores the exact hermitian part, so that
// downstream code can rely on exact conjugate symmetry of the entries.
class SymHermMatrix {
 public:
  // Checked constructor. Throws InvalidMatrixError if entries are non-finite,
  // non-square, real-field entries have nonzero imaginary parts, or the
  // asymmetry exceeds check_tol relative to the matrix scale.
  SymHermMatrix(Field field, const Eigen::MatrixXcd& entries,
                double check_tol = 1e-9);

  // Convenience constructor for the real field.
  explicit SymHermMatrix(const Eigen::MatrixXd& entries,
                         double check_tol = 1e-9);

  static SymHermMatrix Zero(int p, Field field);
  static SymHermMatrix Identity(int p, Field field);
  // Scaled identity c * I_p.
  static SymHermMatrix ScaledIdentity(int p, Field field, double c);

  // Projects an almost-hermitian matrix onto its hermitian part without the
  // asymmetry check. Used internally where round-off breaks exact symmetry
  // of a quantity which is hermitian in exact arithmetic.
  static SymHermMatrix Project(Field field, const Eigen::MatrixXcd& entries);

  Field field() const { return field_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

  const Eigen::MatrixXcd& mat() const { return mat_; }
  // Real part view; the full content for the real field.
  Eigen::MatrixXd real_mat() const { return mat_.real(); }

  double frobenius_norm() const { return mat_.norm(); }

  SymHermMatrix operator+(const SymHermMatrix& other) const;
  SymHermMatrix operator-(const SymHermMatrix& other) const;
  SymHermMatrix operator*(double scalar) const;

  // Largest absolute entry difference, ignoring field tags.
  double max_abs_diff(const SymHermMatrix& other) const;

 private:
  SymHermMatrix() = default;

  Field field_ = Field::kReal;
  Eigen::MatrixXcd mat_;
};

// Throws InvalidMatrixError unless both operands share field and dimension.
void require_same_shape(const SymHermMatrix& a, const SymHermMatrix& b);

}  // namespace matmoments
