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

#include "matmoments/moment_space.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "matmoments/special.hpp"
#include "wide_scalar.hpp"

namespace matmoments {

namespace {

// Hankel matrix whose (r, c) block is entry(r + c), r, c = 0..size-1.
Eigen::MatrixXcd hankel_from(
    int size, int p,
    const std::function<Eigen::MatrixXcd(int)>& entry) {
  Eigen::MatrixXcd out(size * p, size * p);
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      out.block(r * p, c * p, p, p) = entry(r + c);
    }
  }
  return out;
}

std::vector<wide::Mat> widen_with_identity(const MomentSequence& s, int count) {
  std::vector<wide::Mat> out;
  out.reserve(static_cast<std::size_t>(count) + 1);
  out.push_back(wide::Mat::Identity(s.dim(), s.dim()));
  for (int k = 1; k <= count; ++k) {
    out.push_back(wide::widen(s.moment(k).mat()));
  }
  return out;
}

enum class SweepStatus { kOk, kNotInterior, kSingularRange };

struct SweepResult {
  SweepStatus status = SweepStatus::kOk;
  int failed_order = 0;
  std::vector<wide::Mat> positions;  // U_k for the orders that succeeded
};

// Progressive interiority/canonical sweep: for k = 1..n computes the
// extremal bounds from the already-validated prefix and checks that the
// rescaled position of S_k lies strictly inside (0, I). This grades the
// tolerance by the k-th range scale; a fixed eigenvalue floor on the raw
// order-n Hankel matrices would reject every deep sequence, since their
// smallest eigenvalues decay like 4^(-n^2/4) even at the center.
SweepResult canonical_sweep(const std::vector<wide::Mat>& s, int n,
                            const Tolerance& tol) {
  SweepResult result;
  const int p = static_cast<int>(s.front().rows());
  for (int k = 1; k <= n; ++k) {
    wide::ExtremalBounds bounds;
    try {
      bounds = wide::extremal_bounds(s, k);
    } catch (const SingularHankelError&) {
      result.status = SweepStatus::kNotInterior;
      result.failed_order = k;
      return result;
    }
    const wide::Mat range = wide::hermitize(bounds.upper - bounds.lower);
    const auto range_eig = wide::eig(range);
    const long double radius =
        std::max(std::abs(range_eig.eigenvalues()(0)),
                 std::abs(range_eig.eigenvalues()(p - 1)));
    const long double floor =
        std::max<long double>(tol.abs, tol.rel * radius);
    if (!(range_eig.eigenvalues()(0) > floor)) {
      result.status = SweepStatus::kSingularRange;
      result.failed_order = k;
      return result;
    }
    wide::RealVec inv_root = range_eig.eigenvalues();
    for (Eigen::Index i = 0; i < inv_root.size(); ++i) {
      inv_root(i) = 1.0L / std::sqrt(inv_root(i));
    }
    const wide::Mat scaling = range_eig.eigenvectors() *
                              inv_root.asDiagonal() *
                              range_eig.eigenvectors().adjoint();
    const wide::Mat position = wide::hermitize(
        scaling * (s[static_cast<std::size_t>(k)] - bounds.lower) * scaling);
    const auto pos_eig = wide::eig(position);
    const long double lo = pos_eig.eigenvalues()(0);
    const long double hi = pos_eig.eigenvalues()(p - 1);
    const long double lo_floor = std::max<long double>(
        tol.abs, tol.rel * std::max(std::abs(lo), std::abs(hi)));
    const long double hi_floor = std::max<long double>(
        tol.abs,
        tol.rel * std::max(std::abs(1.0L - lo), std::abs(1.0L - hi)));
    if (!(lo > lo_floor) || !(hi < 1.0L - hi_floor)) {
      result.status = SweepStatus::kNotInterior;
      result.failed_order = k;
      return result;
    }
    result.positions.push_back(position);
  }
  return result;
}

}  // namespace

MomentSequence::MomentSequence(Field field, int p,
                               std::vector<SymHermMatrix> moments)
    : field_(field), p_(p), s_(std::move(moments)) {
  if (p_ < 1) throw InvalidMatrixError("moment sequence needs p >= 1");
  for (const auto& m : s_) {
    if (m.field() != field_ || m.dim() != p_) {
      throw InvalidMatrixError("moment sequence entries disagree on shape");
    }
  }
}

const SymHermMatrix& MomentSequence::moment(int k) const {
  if (k < 1 || k > length()) {
    throw IndexError("moment index " + std::to_string(k) + " out of range");
  }
  return s_[static_cast<std::size_t>(k - 1)];
}

SymHermMatrix MomentSequence::moment_or_identity(int k) const {
  if (k == 0) return SymHermMatrix::Identity(p_, field_);
  return moment(k);
}

MomentSequence MomentSequence::prefix(int m) const {
  if (m < 0 || m > length()) {
    throw IndexError("prefix length out of range");
  }
  return MomentSequence(field_, p_,
                        std::vector<SymHermMatrix>(s_.begin(), s_.begin() + m));
}

HankelPair hankel_matrices(const MomentSequence& s, int m) {
  if (m < 1 || m > s.length()) {
    throw IndexError("Hankel order " + std::to_string(m) +
                     " out of range for n=" + std::to_string(s.length()));
  }
  const int p = s.dim();
  auto S = [&](int k) -> Eigen::MatrixXcd { return s.moment_or_identity(k).mat(); };

  HankelPair out;
  if (m % 2 == 0) {
    const int j = m / 2;
    out.lower = hankel_from(j + 1, p, [&](int k) -> Eigen::MatrixXcd { return S(k); });
    out.upper = hankel_from(j, p, [&](int k) -> Eigen::MatrixXcd { return S(k + 1) - S(k + 2); });
  } else {
    const int j = (m - 1) / 2;
    out.lower = hankel_from(j + 1, p, [&](int k) -> Eigen::MatrixXcd { return S(k + 1); });
    out.upper = hankel_from(j + 1, p, [&](int k) -> Eigen::MatrixXcd { return S(k) - S(k + 1); });
  }
  return out;
}

bool is_interior(const MomentSequence& s, const Tolerance& tol) {
  if (s.length() == 0) return true;
  const auto wide_moments = widen_with_identity(s, s.length());
  return canonical_sweep(wide_moments, s.length(), tol).status ==
         SweepStatus::kOk;
}

ExtremalPair extremal_moments(const MomentSequence& s, int k,
                              const Tolerance& tol) {
  if (k < 1) throw IndexError("extremal moment index must be >= 1");
  if (k - 1 > s.length()) {
    throw IndexError("extremal_moments(k) needs the prefix S_1..S_{k-1}");
  }
  if (!is_interior(s.prefix(k - 1), tol)) {
    throw NotInteriorError("prefix of length " + std::to_string(k - 1) +
                           " is not interior");
  }
  return extremal_moments_unchecked(s, k);
}

ExtremalPair extremal_moments_unchecked(const MomentSequence& s, int k) {
  if (k < 1) throw IndexError("extremal moment index must be >= 1");
  if (k - 1 > s.length()) {
    throw IndexError("extremal_moments(k) needs the prefix S_1..S_{k-1}");
  }
  const auto wide_moments = widen_with_identity(s, k - 1);
  const wide::ExtremalBounds bounds = wide::extremal_bounds(wide_moments, k);
  return ExtremalPair{
      SymHermMatrix::Project(s.field(), wide::narrow(bounds.lower)),
      SymHermMatrix::Project(s.field(), wide::narrow(bounds.upper))};
}

// Canonical positions of every order, or the failure that stops the sweep.
// Shared with the canonical-map module through this internal hook.
namespace detail {

std::vector<Eigen::MatrixXcd> canonical_positions(const MomentSequence& s,
                                                  const Tolerance& tol) {
  const auto wide_moments = widen_with_identity(s, s.length());
  const SweepResult sweep = canonical_sweep(wide_moments, s.length(), tol);
  if (sweep.status == SweepStatus::kSingularRange) {
    throw SingularRangeError(
        "moment range at k=" + std::to_string(sweep.failed_order) +
        " fails strict positivity");
  }
  if (sweep.status == SweepStatus::kNotInterior) {
    throw NotInteriorError("moment sequence leaves the interior at order " +
                           std::to_string(sweep.failed_order));
  }
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(sweep.positions.size());
  for (const auto& u : sweep.positions) out.push_back(wide::narrow(u));
  return out;
}

}  // namespace detail

double log_volume(int n, int p, Field field) {
  if (n < 1 || p < 1) throw DomainError("log_volume needs n >= 1 and p >= 1");
  double total = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double a = field == Field::kReal ? 0.5 * k * (p + 1)
                                           : static_cast<double>(k) * p;
    total += log_multivariate_beta(p, a, a, field);
  }
  return total;
}

std::vector<double> arcsine_moments(int k) {
  if (k < 1) throw DomainError("arcsine_moments needs k >= 1");
  std::vector<double> out(static_cast<std::size_t>(k));
  double value = 1.0;
  for (int j = 1; j <= k; ++j) {
    // s_j = s_{j-1} * (2j-1) / (2j), starting from s_0 = 1.
    value *= static_cast<double>(2 * j - 1) / static_cast<double>(2 * j);
    out[static_cast<std::size_t>(j - 1)] = value;
  }
  return out;
}

Eigen::MatrixXd clt_matrix_A(int k) {
  if (k < 1) throw DomainError("clt_matrix_A needs k >= 1");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, k);
  for (int i = 1; i <= k; ++i) {
    const double scale = std::pow(2.0, -2 * i + 2);
    for (int j = 1; j <= i; ++j) {
      // binom(2i, i-j) by the multiplicative formula; exact in double for
      // every k of practical size.
      double binom = 1.0;
      for (int t = 1; t <= i - j; ++t) {
        binom *= static_cast<double>(2 * i - (i - j) + t) /
                 static_cast<double>(t);
      }
      a(i - 1, j - 1) = scale * binom;
    }
  }
  return a;
}

double CltConstants::scale(int n, int p) const {
  return field == Field::kReal ? std::sqrt(4.0 * n * (p + 1))
                               : std::sqrt(8.0 * n * p);
}

CltConstants clt_constants(int k, Field field) {
  CltConstants out;
  out.k = k;
  out.field = field;
  out.A = clt_matrix_A(k);
  out.arcsine = arcsine_moments(k);
  return out;
}

std::vector<SymHermMatrix> standardize_moment_vector(
    const MomentSequence& prefix, int ambient_n) {
  const int k = prefix.length();
  if (k < 1) throw DomainError("standardize_moment_vector needs k >= 1");
  if (ambient_n < k) {
    throw DomainError("ambient moment-space dimension must be >= k");
  }
  const int p = prefix.dim();
  const CltConstants c = clt_constants(k, prefix.field());
  const double scale = c.scale(ambient_n, p);

  // Centered blocks X_i = S_i - s_i^0 I, then forward substitution solves
  // A Y = X block-row by block-row.
  std::vector<Eigen::MatrixXcd> y(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    Eigen::MatrixXcd x =
        prefix.moment(i + 1).mat() -
        c.arcsine[static_cast<std::size_t>(i)] *
            Eigen::MatrixXcd::Identity(p, p);
    for (int j = 0; j < i; ++j) {
      x -= c.A(i, j) * y[static_cast<std::size_t>(j)];
    }
    y[static_cast<std::size_t>(i)] = x / c.A(i, i);
  }

  std::vector<SymHermMatrix> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    out.push_back(SymHermMatrix::Project(
        prefix.field(), scale * y[static_cast<std::size_t>(i)]));
  }
  return out;
}

}  // namespace matmoments
