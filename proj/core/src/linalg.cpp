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

#include "matmoments/linalg.hpp"

#include <cmath>

namespace matmoments {

EigSym eig_sym(const SymHermMatrix& m) {
  EigSym out;
  if (m.field() == Field::kReal) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.real_mat());
    if (solver.info() != Eigen::Success) {
      throw InvalidMatrixError("eigendecomposition failed to converge");
    }
    out.values = solver.eigenvalues();
    out.vectors = solver.eigenvectors().cast<std::complex<double>>();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.mat());
    if (solver.info() != Eigen::Success) {
      throw InvalidMatrixError("eigendecomposition failed to converge");
    }
    out.values = solver.eigenvalues();
    out.vectors = solver.eigenvectors();
  }
  return out;
}

Eigen::VectorXd eigenvalues_sym(const SymHermMatrix& m) {
  if (m.field() == Field::kReal) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        m.real_mat(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw InvalidMatrixError("eigendecomposition failed to converge");
    }
    return solver.eigenvalues();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.mat(),
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw InvalidMatrixError("eigendecomposition failed to converge");
  }
  return solver.eigenvalues();
}

bool is_positive_definite(const SymHermMatrix& m, const Tolerance& tol) {
  const Eigen::VectorXd ev = eigenvalues_sym(m);
  const double radius =
      std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  return ev(0) > tol.floor(radius);
}

bool loewner_interval_contains(const SymHermMatrix& m, const Tolerance& tol) {
  if (!is_positive_definite(m, tol)) return false;
  const SymHermMatrix complement =
      SymHermMatrix::Identity(m.dim(), m.field()) - m;
  return is_positive_definite(complement, tol);
}

SymHermMatrix sym_sqrt(const SymHermMatrix& m, bool inverse,
                       const Tolerance& tol) {
  const EigSym eig = eig_sym(m);
  const double radius = std::max(std::abs(eig.values(0)),
                                 std::abs(eig.values(eig.values.size() - 1)));
  const double floor = tol.floor(radius);

  Eigen::VectorXd root(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    double v = eig.values(i);
    if (v < -floor) {
      throw DomainError("sym_sqrt requires a positive semidefinite matrix");
    }
    if (v < 0.0) v = 0.0;  // clamp round-off on boundary matrices
    if (inverse) {
      if (v <= floor) {
        throw SingularMatrixError(
            "inverse square root of a singular matrix at tolerance");
      }
      root(i) = 1.0 / std::sqrt(v);
    } else {
      root(i) = std::sqrt(v);
    }
  }

  const Eigen::MatrixXcd result =
      eig.vectors * root.asDiagonal() * eig.vectors.adjoint();
  return SymHermMatrix::Project(m.field(), result);
}

}  // namespace matmoments
