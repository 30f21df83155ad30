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

#include "matmoments/canonical.hpp"

#include <cmath>
#include <string>

#include "wide_scalar.hpp"

namespace matmoments {

CanonicalSequence::CanonicalSequence(Field field, int p,
                                     std::vector<SymHermMatrix> u,
                                     const Tolerance& tol)
    : field_(field), p_(p), u_(std::move(u)) {
  if (p_ < 1) throw InvalidMatrixError("canonical sequence needs p >= 1");
  for (std::size_t k = 0; k < u_.size(); ++k) {
    if (u_[k].field() != field_ || u_[k].dim() != p_) {
      throw InvalidMatrixError("canonical sequence entries disagree on shape");
    }
    if (!loewner_interval_contains(u_[k], tol)) {
      throw DomainError("canonical moment U_" + std::to_string(k + 1) +
                        " is not strictly inside (0, I)");
    }
  }
}

const SymHermMatrix& CanonicalSequence::canonical(int k) const {
  if (k < 1 || k > length()) {
    throw IndexError("canonical index " + std::to_string(k) + " out of range");
  }
  return u_[static_cast<std::size_t>(k - 1)];
}

CanonicalSequence CanonicalSequence::prefix(int m) const {
  if (m < 0 || m > length()) throw IndexError("prefix length out of range");
  return CanonicalSequence(
      field_, p_, std::vector<SymHermMatrix>(u_.begin(), u_.begin() + m));
}

CanonicalSequence CanonicalSequence::Center(Field field, int p, int n) {
  std::vector<SymHermMatrix> u(
      static_cast<std::size_t>(n), SymHermMatrix::ScaledIdentity(p, field, 0.5));
  return CanonicalSequence(field, p, std::move(u));
}

namespace {

// Range widths, non-symmetric canonical moments and zeta coefficients in
// one extended-precision pass:
//   D_1 = I,  D_{m+1} = D_m^{1/2} U_m (I - U_m) D_m^{1/2},
//   Ubar_m = D_m^{-1/2} U_m D_m^{1/2},
//   zeta_1 = Ubar_1,  zeta_j = (I - Ubar_{j-1}) Ubar_j.
struct ZetaPipeline {
  std::vector<wide::Mat> widths;
  std::vector<wide::Mat> ubar;
  std::vector<wide::Mat> zeta;
};

ZetaPipeline zeta_pipeline(const CanonicalSequence& u, const Tolerance& tol) {
  const int p = u.dim();
  const int n = u.length();
  ZetaPipeline out;
  const wide::Mat identity = wide::Mat::Identity(p, p);
  wide::Mat d = identity;
  for (int m = 1; m <= n; ++m) {
    out.widths.push_back(d);
    const wide::Mat um = wide::widen(u.canonical(m).mat());
    wide::Mat root;
    wide::Mat root_inv;
    try {
      root = wide::sqrt_psd(d, /*inverse=*/false, tol.rel);
      root_inv = wide::sqrt_psd(d, /*inverse=*/true, tol.rel);
    } catch (const SingularMatrixError&) {
      throw SingularRangeError("range width D_" + std::to_string(m) +
                               " lost strict positivity");
    }
    out.ubar.push_back(root_inv * um * root);
    if (m == 1) {
      out.zeta.push_back(out.ubar.back());
    } else {
      out.zeta.push_back(
          (identity - out.ubar[static_cast<std::size_t>(m - 2)]) *
          out.ubar.back());
    }
    // U (I - U) is hermitian because U and I - U commute.
    d = wide::hermitize(root * (um * (identity - um)) * root);
  }
  return out;
}

// Triangular reconstruction: S_k = G_{k,k} with G_{0,j} = I, G_{i,j} = 0 for
// i > j and G_{i,j} = G_{i,j-1} + zeta_{j-i+1} G_{i-1,j}.
std::vector<wide::Mat> reconstruct_moments(const ZetaPipeline& zp, int n,
                                           int p) {
  std::vector<wide::Mat> g(static_cast<std::size_t>(n) + 1,
                           wide::Mat::Zero(p, p));
  g[0] = wide::Mat::Identity(p, p);
  std::vector<wide::Mat> s;
  s.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    // Updating i upward makes g[i-1] the already-advanced same-column value
    // the recursion needs; g[j] still holds the zero G_{j,j-1}.
    for (int i = 1; i <= j; ++i) {
      g[static_cast<std::size_t>(i)] +=
          zp.zeta[static_cast<std::size_t>(j - i)] *
          g[static_cast<std::size_t>(i - 1)];
    }
    s.push_back(g[static_cast<std::size_t>(j)]);
  }
  return s;
}

}  // namespace

RangeWidths range_widths(const CanonicalSequence& u, const Tolerance& tol) {
  const ZetaPipeline zp = zeta_pipeline(u, tol);
  RangeWidths out;
  out.widths.reserve(zp.widths.size());
  for (const auto& d : zp.widths) {
    out.widths.push_back(
        SymHermMatrix::Project(u.field(), wide::narrow(d)));
  }
  return out;
}

ZetaSequence nonsymmetric_canonical(const CanonicalSequence& u,
                                    const Tolerance& tol) {
  const ZetaPipeline zp = zeta_pipeline(u, tol);
  ZetaSequence out;
  out.field = u.field();
  out.p = u.dim();
  for (std::size_t i = 0; i < zp.zeta.size(); ++i) {
    out.widths.widths.push_back(
        SymHermMatrix::Project(u.field(), wide::narrow(zp.widths[i])));
    out.ubar.push_back(wide::narrow(zp.ubar[i]));
    out.zeta.push_back(wide::narrow(zp.zeta[i]));
  }
  return out;
}

CanonicalSequence moments_to_canonical(const MomentSequence& s,
                                       const Tolerance& tol) {
  std::vector<Eigen::MatrixXcd> positions = detail::canonical_positions(s, tol);
  std::vector<SymHermMatrix> u;
  u.reserve(positions.size());
  for (const auto& m : positions) {
    u.push_back(SymHermMatrix::Project(s.field(), m));
  }
  return CanonicalSequence(s.field(), s.dim(), std::move(u), tol);
}

MomentSequence canonical_to_moments(const CanonicalSequence& u,
                                    const Tolerance& tol) {
  const int n = u.length();
  const int p = u.dim();
  const ZetaPipeline zp = zeta_pipeline(u, tol);
  const std::vector<wide::Mat> wide_moments = reconstruct_moments(zp, n, p);
  std::vector<SymHermMatrix> s;
  s.reserve(wide_moments.size());
  for (const auto& m : wide_moments) {
    s.push_back(SymHermMatrix::Project(u.field(), wide::narrow(m)));
  }
  return MomentSequence(u.field(), p, std::move(s));
}

SymHermMatrix moments_via_k_matrix_oracle(const CanonicalSequence& u, int n,
                                          const Tolerance& tol) {
  if (n < 1 || n > u.length()) {
    throw IndexError("oracle order n out of range");
  }
  const int p = u.dim();
  const ZetaPipeline zp = zeta_pipeline(u, tol);

  // Rows r = 0..2n of the lower triangular block array; only columns with
  // r + c even are nonzero. Two row buffers suffice.
  const int cols = 2 * n + 1;
  std::vector<wide::Mat> prev(static_cast<std::size_t>(cols),
                              wide::Mat::Zero(p, p));
  std::vector<wide::Mat> curr(static_cast<std::size_t>(cols),
                              wide::Mat::Zero(p, p));
  prev[0] = wide::Mat::Identity(p, p);  // K_{0,0}

  for (int r = 1; r <= 2 * n; ++r) {
    // Only the cone r + c <= 2n feeds K_{2n,0}; cells outside it would ask
    // for zeta indices beyond the data.
    for (int c = 0; c <= r && r + c <= 2 * n; ++c) {
      if ((r + c) % 2 != 0) {
        curr[static_cast<std::size_t>(c)].setZero();
        continue;
      }
      if (c == r) {
        curr[static_cast<std::size_t>(c)] = wide::Mat::Identity(p, p);
        continue;
      }
      wide::Mat value = wide::Mat::Zero(p, p);
      if (c >= 1) value = prev[static_cast<std::size_t>(c - 1)];
      if (c + 1 <= r - 1) {
        value += prev[static_cast<std::size_t>(c + 1)] *
                 zp.zeta[static_cast<std::size_t>(c)].adjoint();
      }
      curr[static_cast<std::size_t>(c)] = value;
    }
    std::swap(prev, curr);
  }
  // S_n = K_{2n,0}; adjoint-symmetric to the recursion value, so projecting
  // onto the hermitian part returns the moment itself.
  return SymHermMatrix::Project(u.field(), wide::narrow(prev[0]));
}

Eigen::MatrixXcd block_jacobi_operator(const ZetaSequence& zeta, int N) {
  if (N < 1) throw IndexError("block Jacobi operator needs N >= 1");
  if (N - 1 > static_cast<int>(zeta.zeta.size())) {
    throw IndexError("block Jacobi operator needs zeta_1..zeta_{N-1}");
  }
  const int p = zeta.p;
  Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(N * p, N * p);
  for (int r = 0; r + 1 < N; ++r) {
    J.block(r * p, (r + 1) * p, p, p) = Eigen::MatrixXcd::Identity(p, p);
    J.block((r + 1) * p, r * p, p, p) =
        zeta.zeta[static_cast<std::size_t>(r)].adjoint();
  }
  return J;
}

MomentSequence discrete_measure_moments(
    const std::vector<double>& points,
    const std::vector<SymHermMatrix>& weights, int k) {
  if (points.empty() || points.size() != weights.size()) {
    throw WeightError("atoms and weights must be non-empty and equal length");
  }
  if (k < 1) throw DomainError("discrete_measure_moments needs k >= 1");
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw WeightError("atoms must be distinct");
      }
    }
  }
  const Field field = weights.front().field();
  const int p = weights.front().dim();
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(p, p);
  for (const auto& w : weights) {
    if (w.field() != field || w.dim() != p) {
      throw WeightError("weights disagree on shape");
    }
    const Eigen::VectorXd ev = eigenvalues_sym(w);
    if (ev(0) < -1e-12) {
      throw WeightError("weights must be positive semidefinite");
    }
    total += w.mat();
  }
  if ((total - Eigen::MatrixXcd::Identity(p, p)).cwiseAbs().maxCoeff() >
      1e-12) {
    throw WeightError("weights must sum to the identity");
  }

  std::vector<SymHermMatrix> s;
  s.reserve(static_cast<std::size_t>(k));
  std::vector<double> power(points.size(), 1.0);
  for (int j = 1; j <= k; ++j) {
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(p, p);
    for (std::size_t i = 0; i < points.size(); ++i) {
      power[i] *= points[i];
      sum += power[i] * weights[i].mat();
    }
    s.push_back(SymHermMatrix::Project(field, sum));
  }
  return MomentSequence(field, p, std::move(s));
}

Eigen::MatrixXcd numerical_jacobian_at_center(int k, int p, double h,
                                              Field field) {
  if (k < 1 || p < 1) throw DomainError("jacobian probe needs k, p >= 1");
  if (!(h > 1e-7 && h < 1e-3)) {
    throw DomainError("finite-difference step h must lie in (1e-7, 1e-3)");
  }

  Eigen::MatrixXcd jac(k * p, k * p);
  for (int j = 0; j < k; ++j) {
    for (int a = 0; a < p; ++a) {
      auto probe = [&](double sign) {
        std::vector<SymHermMatrix> u;
        u.reserve(static_cast<std::size_t>(k));
        for (int block = 0; block < k; ++block) {
          Eigen::MatrixXcd m =
              0.5 * Eigen::MatrixXcd::Identity(p, p);
          if (block == j) m(a, a) += sign * h;
          u.push_back(SymHermMatrix(field, m));
        }
        return canonical_to_moments(CanonicalSequence(field, p, std::move(u)));
      };
      const MomentSequence plus = probe(+1.0);
      const MomentSequence minus = probe(-1.0);
      for (int i = 0; i < k; ++i) {
        const Eigen::MatrixXcd diff =
            (plus.moment(i + 1).mat() - minus.moment(i + 1).mat()) / (2.0 * h);
        jac.block(i * p, j * p + a, p, 1) = diff.col(a);
      }
    }
  }
  return jac;
}

}  // namespace matmoments
