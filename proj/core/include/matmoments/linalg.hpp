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

#include "matmoments/matrix.hpp"

namespace matmoments {

// Tolerance for positivity decisions: an eigenvalue counts as positive when
// it exceeds max(abs, rel * spectral_radius). Boundary matrices are
// classified as not positive definite.
struct Tolerance {
  double rel = 1e-10;
  double abs = 1e-12;

  double floor(double spectral_radius) const {
    return abs > rel * spectral_radius ? abs : rel * spectral_radius;
  }
};

struct EigSym {
  Eigen::VectorXd values;    // ascending
  Eigen::MatrixXcd vectors;  // unitary; real orthogonal for the real field
};

// Eigendecomposition of a symmetric/hermitian matrix, M = V diag(values) V*.
EigSym eig_sym(const SymHermMatrix& m);

// Eigenvalues only (ascending); cheaper inner loop for positivity checks.
Eigen::VectorXd eigenvalues_sym(const SymHermMatrix& m);

bool is_positive_definite(const SymHermMatrix& m, const Tolerance& tol = {});

// True iff m and I - m are both positive definite, i.e. m lies strictly
// inside the matrix interval (0_p, I_p) in the Loewner order.
bool loewner_interval_contains(const SymHermMatrix& m,
                               const Tolerance& tol = {});

// Unique PSD square root of a PSD matrix, or the inverse square root when
// inverse is true. Eigenvalues in (-floor, 0] are clamped to zero so that
// round-off on boundary matrices does not raise spurious errors; eigenvalues
// below -floor throw DomainError. The inverse square root throws
// SingularMatrixError when the smallest eigenvalue is at or below the floor.
SymHermMatrix sym_sqrt(const SymHermMatrix& m, bool inverse = false,
                       const Tolerance& tol = {});

}  // namespace matmoments
