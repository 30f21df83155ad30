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

// Internal extended-precision kernel of the moment-space geometry.
//
// The canonical-moment coordinates are exponentially contracting: the k-th
// admissible range shrinks like 4^(1-k), so recovering position inside it
// cancels nearly all stored digits of the moments. Running the Hankel
// completions, range recursions and triangular reconstructions in 80-bit
// arithmetic keeps each public double-precision result at the information
// floor of its double inputs instead of losing two extra decades to
// round-off accumulation. Public interfaces stay IEEE double throughout.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "matmoments/errors.hpp"

namespace matmoments::wide {

using Scalar = std::complex<long double>;
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using RealVec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

inline Mat widen(const Eigen::MatrixXcd& m) {
  Mat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out(i, j) = Scalar(static_cast<long double>(m(i, j).real()),
                         static_cast<long double>(m(i, j).imag()));
    }
  }
  return out;
}

inline Eigen::MatrixXcd narrow(const Mat& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out(i, j) = std::complex<double>(static_cast<double>(m(i, j).real()),
                                       static_cast<double>(m(i, j).imag()));
    }
  }
  return out;
}

inline Mat hermitize(const Mat& m) { return 0.5 * (m + m.adjoint()); }

// Hermitian eigendecomposition helpers. Failure modes surface as library
// errors so callers can translate them into their domain-specific ones.

inline Eigen::SelfAdjointEigenSolver<Mat> eig(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(hermitize(m));
  if (solver.info() != Eigen::Success) {
    throw InvalidMatrixError("extended-precision eigendecomposition failed");
  }
  return solver;
}

// Unique PSD square root, or its inverse. min_ratio is the relative floor
// below which an eigenvalue counts as singular (relative to the largest
// magnitude eigenvalue).
inline Mat sqrt_psd(const Mat& m, bool inverse, long double min_ratio) {
  const auto solver = eig(m);
  RealVec values = solver.eigenvalues();
  const long double radius =
      std::max(std::abs(values(0)), std::abs(values(values.size() - 1)));
  const long double floor = min_ratio * std::max<long double>(radius, 1e-300L);
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    long double v = values(i);
    if (inverse) {
      if (v <= floor) {
        throw SingularMatrixError("inverse square root below tolerance");
      }
      values(i) = 1.0L / std::sqrt(v);
    } else {
      if (v < 0.0L) v = 0.0L;
      values(i) = std::sqrt(v);
    }
  }
  return solver.eigenvectors() * values.asDiagonal() *
         solver.eigenvectors().adjoint();
}

inline Mat stack_blocks(const std::vector<Mat>& blocks) {
  const int p = static_cast<int>(blocks.front().rows());
  Mat out(static_cast<int>(blocks.size()) * p, p);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out.block(static_cast<int>(i) * p, 0, p, p) = blocks[i];
  }
  return out;
}

// Schur completion term h* H^{-1} h via Cholesky of the full block matrix.
inline Mat schur_term(const Mat& hankel, const Mat& border) {
  Eigen::LLT<Mat> llt(hankel);
  if (llt.info() != Eigen::Success) {
    throw SingularHankelError("block Hankel matrix is not positive definite");
  }
  return border.adjoint() * llt.solve(border);
}

// Extremal completion bounds for the k-th moment of a [0, 1] matrix
// measure, from the widened moments with entries[0] = S_0 = I. Schur
// complements of the bordered block Hankel matrices; conventions
// S_1^- = 0, S_1^+ = I, S_2^+ = S_1.
struct ExtremalBounds {
  Mat lower;
  Mat upper;
};

inline ExtremalBounds extremal_bounds(const std::vector<Mat>& s, int k) {
  const int p = static_cast<int>(s.front().rows());
  ExtremalBounds out;
  if (k == 1) {
    out.lower = Mat::Zero(p, p);
    out.upper = Mat::Identity(p, p);
    return out;
  }
  const int n = k - 1;

  auto hankel_of = [&](int size, auto entry) {
    Mat h(size * p, size * p);
    for (int r = 0; r < size; ++r) {
      for (int c = 0; c < size; ++c) h.block(r * p, c * p, p, p) = entry(r + c);
    }
    return h;
  };
  auto S = [&](int i) -> const Mat& { return s[static_cast<std::size_t>(i)]; };

  {
    std::vector<Mat> border;
    Mat base;
    if (n % 2 == 0) {
      const int m = n / 2;
      base = hankel_of(m, [&](int i) -> Mat { return S(i + 1); });
      for (int i = m + 1; i <= 2 * m; ++i) border.push_back(S(i));
    } else {
      const int m = (n + 1) / 2;
      base = hankel_of(m, [&](int i) -> Mat { return S(i); });
      for (int i = m; i <= 2 * m - 1; ++i) border.push_back(S(i));
    }
    out.lower = schur_term(base, stack_blocks(border));
  }

  if (n == 1) {
    out.upper = S(1);
  } else if (n % 2 == 0) {
    const int m = n / 2;
    const Mat base = hankel_of(m, [&](int i) -> Mat { return S(i) - S(i + 1); });
    std::vector<Mat> border;
    for (int i = m; i <= 2 * m - 1; ++i) border.push_back(S(i) - S(i + 1));
    out.upper = S(n) - schur_term(base, stack_blocks(border));
  } else {
    const int m = (n + 1) / 2;
    const Mat base =
        hankel_of(m - 1, [&](int i) -> Mat { return S(i + 1) - S(i + 2); });
    std::vector<Mat> border;
    for (int i = m; i <= 2 * m - 2; ++i) border.push_back(S(i) - S(i + 1));
    if (border.empty()) {
      out.upper = S(n);
    } else {
      out.upper = S(n) - schur_term(base, stack_blocks(border));
    }
  }
  return out;
}

}  // namespace matmoments::wide
