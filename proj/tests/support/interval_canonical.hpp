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

// Test-only oracle: canonical moments of a finitely supported matrix measure
// on an arbitrary interval [lo, hi].
//
// The production library specializes every formula to [0, 1]. This oracle
// instead derives the extremal moments on [lo, hi] from first principles:
// the moment sequence extends to order m+1 iff four auxiliary Hankel
// matrices stay PSD, built from the moment sequences of the measures
//   d nu,  (x - lo) d nu,  (hi - x) d nu,  (x - lo)(hi - x) d nu,
// and the extremal values are the Schur-complement completion bounds of the
// bordered Hankel matrices. No code is shared with the production
// moment-space path, so agreement between the two is evidence, not
// tautology. Everything runs in extended precision: wide intervals inflate
// the auxiliary moments and an oracle should be more accurate than the code
// it referees.

#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace matmoments_test {

struct IntervalMeasure {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> atoms;
  std::vector<Eigen::MatrixXcd> weights;  // hermitian PSD, summing to I
};

namespace interval_detail {

using Scalar = std::complex<long double>;
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

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

// Moments T_0..T_count of the measure.
inline std::vector<Mat> raw_moments(const IntervalMeasure& mu, int count) {
  const int p = static_cast<int>(mu.weights.front().rows());
  std::vector<Mat> t(static_cast<std::size_t>(count) + 1, Mat::Zero(p, p));
  for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
    const Mat w = widen(mu.weights[i]);
    long double power = 1.0L;
    for (int j = 0; j <= count; ++j) {
      t[static_cast<std::size_t>(j)] += Scalar(power, 0.0L) * w;
      power *= static_cast<long double>(mu.atoms[i]);
    }
  }
  return t;
}

inline Mat hankel(const std::vector<Mat>& seq, int size) {
  const int p = static_cast<int>(seq.front().rows());
  Mat h(size * p, size * p);
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      h.block(r * p, c * p, p, p) = seq[static_cast<std::size_t>(r + c)];
    }
  }
  return h;
}

inline Mat border(const std::vector<Mat>& seq, int from, int to) {
  const int p = static_cast<int>(seq.front().rows());
  Mat h((to - from + 1) * p, p);
  for (int i = from; i <= to; ++i) {
    h.block((i - from) * p, 0, p, p) = seq[static_cast<std::size_t>(i)];
  }
  return h;
}

// h* H^{-1} h; zero when the border is empty.
inline Mat completion(const std::vector<Mat>& seq, int base_size, int from,
                      int to) {
  const int p = static_cast<int>(seq.front().rows());
  if (base_size == 0) return Mat::Zero(p, p);
  const Mat h = hankel(seq, base_size);
  const Mat b = border(seq, from, to);
  Eigen::LLT<Mat> llt(h);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("interval oracle: auxiliary Hankel not PD");
  }
  return b.adjoint() * llt.solve(b);
}

inline Mat hermitian_inv_sqrt(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> eig(
      Mat(0.5 * (m + m.adjoint())));
  Eigen::Matrix<long double, Eigen::Dynamic, 1> root = eig.eigenvalues();
  for (Eigen::Index i = 0; i < root.size(); ++i) {
    if (!(root(i) > 0.0L)) {
      throw std::runtime_error("interval oracle: range not positive");
    }
    root(i) = 1.0L / std::sqrt(root(i));
  }
  return eig.eigenvectors() * root.asDiagonal() *
         eig.eigenvectors().adjoint();
}

}  // namespace interval_detail

// Canonical moments U_1..U_count of the measure with respect to its
// interval [lo, hi].
inline std::vector<Eigen::MatrixXcd> interval_canonical_moments(
    const IntervalMeasure& mu, int count) {
  using interval_detail::Mat;
  const int p = static_cast<int>(mu.weights.front().rows());
  const long double lo = static_cast<long double>(mu.lo);
  const long double hi = static_cast<long double>(mu.hi);

  const std::vector<Mat> t = interval_detail::raw_moments(mu, count + 2);

  // Auxiliary moment sequences of the weighted measures.
  std::vector<Mat> f;  // (x - lo) d nu
  std::vector<Mat> g;  // (hi - x) d nu
  std::vector<Mat> q;  // (x - lo)(hi - x) d nu
  for (int j = 0; j + 1 < static_cast<int>(t.size()); ++j) {
    f.push_back(t[static_cast<std::size_t>(j + 1)] -
                lo * t[static_cast<std::size_t>(j)]);
    g.push_back(hi * t[static_cast<std::size_t>(j)] -
                t[static_cast<std::size_t>(j + 1)]);
    if (j + 2 < static_cast<int>(t.size())) {
      q.push_back((lo + hi) * t[static_cast<std::size_t>(j + 1)] -
                  t[static_cast<std::size_t>(j + 2)] -
                  lo * hi * t[static_cast<std::size_t>(j)]);
    }
  }

  std::vector<Eigen::MatrixXcd> u;
  for (int m = 1; m <= count; ++m) {
    Mat lower(p, p);
    Mat upper(p, p);
    if (m == 1) {
      lower = lo * Mat::Identity(p, p);
      upper = hi * Mat::Identity(p, p);
    } else if (m % 2 == 0) {
      const int j = m / 2 - 1;
      lower = interval_detail::completion(t, j + 1, j + 1, 2 * j + 1);
      upper = (lo + hi) * t[static_cast<std::size_t>(m - 1)] -
              lo * hi * t[static_cast<std::size_t>(m - 2)] -
              interval_detail::completion(q, j, j, 2 * j - 1);
    } else {
      const int j = (m - 1) / 2;
      lower = lo * t[static_cast<std::size_t>(m - 1)] +
              interval_detail::completion(f, j, j, 2 * j - 1);
      upper = hi * t[static_cast<std::size_t>(m - 1)] -
              interval_detail::completion(g, j, j, 2 * j - 1);
    }
    const Mat range = upper - lower;
    const Mat scale = interval_detail::hermitian_inv_sqrt(range);
    const Mat centered = t[static_cast<std::size_t>(m)] - lower;
    const Mat value = scale * centered * scale;
    u.push_back(interval_detail::narrow(0.5 * (value + value.adjoint())));
  }
  return u;
}

}  // namespace matmoments_test
