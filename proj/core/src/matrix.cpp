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

#include "matmoments/matrix.hpp"

#include <cmath>

namespace matmoments {

namespace {

bool all_finite(const Eigen::MatrixXcd& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

SymHermMatrix::SymHermMatrix(Field field, const Eigen::MatrixXcd& entries,
                             double check_tol) {
  if (entries.rows() != entries.cols() || entries.rows() == 0) {
    throw InvalidMatrixError("matrix must be square and non-empty");
  }
  if (!all_finite(entries)) {
    throw InvalidMatrixError("matrix has non-finite entries");
  }
  const double scale = std::max(1.0, entries.norm());
  if (field == Field::kReal && entries.imag().norm() > check_tol * scale) {
    throw InvalidMatrixError("real-field matrix has complex entries");
  }
  const double asym = (entries - entries.adjoint()).norm();
  if (asym > check_tol * scale) {
    throw InvalidMatrixError("matrix is not symmetric/hermitian");
  }
  field_ = field;
  mat_ = 0.5 * (entries + entries.adjoint());
  if (field == Field::kReal) {
    mat_.imag().setZero();
  } else {
    // The hermitian average already has an exactly real diagonal up to
    // round-off in the imaginary part; pin it to zero.
    for (Eigen::Index i = 0; i < mat_.rows(); ++i) {
      mat_(i, i) = std::complex<double>(mat_(i, i).real(), 0.0);
    }
  }
}

SymHermMatrix::SymHermMatrix(const Eigen::MatrixXd& entries, double check_tol)
    : SymHermMatrix(Field::kReal, entries.cast<std::complex<double>>(),
                    check_tol) {}

SymHermMatrix SymHermMatrix::Zero(int p, Field field) {
  return SymHermMatrix(field, Eigen::MatrixXcd::Zero(p, p));
}

SymHermMatrix SymHermMatrix::Identity(int p, Field field) {
  return SymHermMatrix(field, Eigen::MatrixXcd::Identity(p, p));
}

SymHermMatrix SymHermMatrix::ScaledIdentity(int p, Field field, double c) {
  return SymHermMatrix(field, c * Eigen::MatrixXcd::Identity(p, p));
}

SymHermMatrix SymHermMatrix::Project(Field field,
                                     const Eigen::MatrixXcd& entries) {
  if (entries.rows() != entries.cols() || entries.rows() == 0) {
    throw InvalidMatrixError("matrix must be square and non-empty");
  }
  if (!all_finite(entries)) {
    throw InvalidMatrixError("matrix has non-finite entries");
  }
  SymHermMatrix out;
  out.field_ = field;
  out.mat_ = 0.5 * (entries + entries.adjoint());
  if (field == Field::kReal) {
    out.mat_.imag().setZero();
  } else {
    for (Eigen::Index i = 0; i < out.mat_.rows(); ++i) {
      out.mat_(i, i) = std::complex<double>(out.mat_(i, i).real(), 0.0);
    }
  }
  return out;
}

SymHermMatrix SymHermMatrix::operator+(const SymHermMatrix& other) const {
  require_same_shape(*this, other);
  return Project(field_, mat_ + other.mat_);
}

SymHermMatrix SymHermMatrix::operator-(const SymHermMatrix& other) const {
  require_same_shape(*this, other);
  return Project(field_, mat_ - other.mat_);
}

SymHermMatrix SymHermMatrix::operator*(double scalar) const {
  return Project(field_, scalar * mat_);
}

double SymHermMatrix::max_abs_diff(const SymHermMatrix& other) const {
  require_same_shape(*this, other);
  return (mat_ - other.mat_).cwiseAbs().maxCoeff();
}

void require_same_shape(const SymHermMatrix& a, const SymHermMatrix& b) {
  if (a.field() != b.field() || a.dim() != b.dim()) {
    throw InvalidMatrixError("matrix field/dimension mismatch");
  }
}

}  // namespace matmoments
