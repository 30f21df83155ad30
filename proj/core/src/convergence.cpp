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

#include "matmoments/convergence.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

namespace matmoments {

namespace {

// Sub-stream purpose tags. The (tag, sample index) pair fully determines a
// replica's randomness.
constexpr std::uint64_t kTagBeta = 1;
constexpr std::uint64_t kTagMoment = 2;
constexpr std::uint64_t kTagCanonical = 3;
constexpr std::uint64_t kTagVolume = 4;
constexpr std::uint64_t kTagLadderBase = 16;

void parallel_for(long count, const std::function<void(long)>& body) {
  const long workers =
      std::min<long>(static_cast<long>(worker_count()), count);
  if (workers <= 1) {
    for (long i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (long t = 0; t < workers; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (long i = t; i < count; i += workers) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

struct Coordinate {
  int block;  // 0-based
  int row;
  int col;
  bool imag;
  GaussTarget target;
  std::string name;
};

std::vector<Coordinate> coordinate_layout(int blocks, int p, Field field,
                                          const std::string& prefix) {
  std::vector<Coordinate> coords;
  for (int b = 0; b < blocks; ++b) {
    const std::string base =
        blocks == 1 ? prefix : prefix + std::to_string(b + 1);
    for (int i = 0; i < p; ++i) {
      coords.push_back({b, i, i, false, GaussTarget::kUnitVariance,
                        base + "[" + std::to_string(i) + "," +
                            std::to_string(i) + "]"});
    }
    for (int i = 0; i < p; ++i) {
      for (int j = i + 1; j < p; ++j) {
        const std::string entry =
            base + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
        coords.push_back({b, i, j, false, GaussTarget::kHalfVariance,
                          field == Field::kReal ? entry : entry + ".re"});
        if (field == Field::kComplex) {
          coords.push_back(
              {b, i, j, true, GaussTarget::kHalfVariance, entry + ".im"});
        }
      }
    }
  }
  return coords;
}

double coordinate_value(const SymHermMatrix& z, const Coordinate& c) {
  const std::complex<double> entry = z.mat()(c.row, c.col);
  return c.imag ? entry.imag() : entry.real();
}

double gauss_cdf(double x, GaussTarget target) {
  const double sigma =
      target == GaussTarget::kUnitVariance ? 1.0 : std::sqrt(0.5);
  return 0.5 * std::erfc(-x / (sigma * std::sqrt(2.0)));
}

std::string target_name(GaussTarget target) {
  return target == GaussTarget::kUnitVariance ? "N(0,1)" : "N(0,1/2)";
}

double field_gamma(Field field, int p) {
  return field == Field::kReal ? 0.5 * (p + 1) : static_cast<double>(p);
}

// Mean, covariance (unbiased) and the KS table of a sample matrix whose row
// i is the flattened replica i. All folds run in index order.
void fill_sample_statistics(const Eigen::MatrixXd& rows,
                            const std::vector<Coordinate>& coords,
                            StatReport* report) {
  const long n = rows.rows();
  const int dim = static_cast<int>(rows.cols());

  Eigen::VectorXd mean = Eigen::VectorXd::Zero(dim);
  for (long i = 0; i < n; ++i) mean += rows.row(i).transpose();
  mean /= static_cast<double>(n);

  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(dim, dim);
  for (long i = 0; i < n; ++i) {
    const Eigen::VectorXd centered = rows.row(i).transpose() - mean;
    cov += centered * centered.transpose();
  }
  cov /= static_cast<double>(n - 1);

  report->empirical_mean.assign(mean.data(), mean.data() + dim);
  report->empirical_covariance = cov;

  Eigen::MatrixXd target = Eigen::MatrixXd::Zero(dim, dim);
  for (int c = 0; c < dim; ++c) {
    target(c, c) = coords[static_cast<std::size_t>(c)].target ==
                           GaussTarget::kUnitVariance
                       ? 1.0
                       : 0.5;
  }
  report->target_covariance = target;
  report->max_covariance_deviation = (cov - target).cwiseAbs().maxCoeff();

  double cross = 0.0;
  for (int c1 = 0; c1 < dim; ++c1) {
    for (int c2 = 0; c2 < dim; ++c2) {
      if (coords[static_cast<std::size_t>(c1)].block !=
          coords[static_cast<std::size_t>(c2)].block) {
        cross = std::max(cross, std::abs(cov(c1, c2)));
      }
    }
  }
  report->max_cross_block_covariance = cross;

  std::vector<double> column(static_cast<std::size_t>(n));
  for (int c = 0; c < dim; ++c) {
    for (long i = 0; i < n; ++i) {
      column[static_cast<std::size_t>(i)] = rows(i, c);
    }
    const GaussTarget target_law = coords[static_cast<std::size_t>(c)].target;
    report->ks.push_back({coords[static_cast<std::size_t>(c)].name,
                          target_name(target_law),
                          ks_statistic(column, target_law)});
  }
}

double max_ks(const StatReport& report) {
  double value = 0.0;
  for (const auto& entry : report.ks) value = std::max(value, entry.distance);
  return value;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::string experiment_kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kBetaToGaussian: return "beta-to-gaussian";
    case ExperimentKind::kCanonicalVector: return "canonical-vector";
    case ExperimentKind::kMomentVector: return "moment-vector";
    case ExperimentKind::kJacobianCheck: return "jacobian-check";
    case ExperimentKind::kVolumeCheck: return "volume-check";
  }
  throw ConfigError("unknown experiment kind");
}

ExperimentKind experiment_kind_from_name(const std::string& name) {
  if (name == "beta-to-gaussian") return ExperimentKind::kBetaToGaussian;
  if (name == "canonical-vector") return ExperimentKind::kCanonicalVector;
  if (name == "moment-vector") return ExperimentKind::kMomentVector;
  if (name == "jacobian-check") return ExperimentKind::kJacobianCheck;
  if (name == "volume-check") return ExperimentKind::kVolumeCheck;
  throw ConfigError("unknown experiment kind: " + name);
}

double ExperimentConfig::threshold(const std::string& name,
                                   double fallback) const {
  const auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

void ExperimentConfig::validate() const {
  if (p < 1) throw ConfigError("config needs p >= 1");
  if (n < 1) throw ConfigError("config needs n >= 1");
  if (k < 1 || k > n) throw ConfigError("config needs 1 <= k <= n");
  const bool needs_samples = kind != ExperimentKind::kJacobianCheck;
  if (needs_samples && samples < 100) {
    throw ConfigError("config needs samples >= 100");
  }
  if (kind == ExperimentKind::kJacobianCheck && !(h > 1e-7 && h < 1e-3)) {
    throw ConfigError("jacobian step h must lie in (1e-7, 1e-3)");
  }
  if (!(scale_factor > 0.0)) throw ConfigError("scale factor must be > 0");
}

bool StatReport::passed() const {
  for (const auto& v : verdicts) {
    if (!v.pass) return false;
  }
  return !verdicts.empty();
}

SymHermMatrix standardize_beta_sample(const SymHermMatrix& x, double gamma,
                                      int n) {
  if (!(gamma > 0.0)) throw DomainError("standardization needs gamma > 0");
  const SymHermMatrix centered =
      x - SymHermMatrix::ScaledIdentity(x.dim(), x.field(), 0.5);
  return centered * std::sqrt(8.0 * gamma * n);
}

double ks_statistic(const std::vector<double>& samples, GaussTarget target) {
  if (samples.size() < 100) {
    throw TooFewSamplesError("KS statistic needs at least 100 samples");
  }
  std::vector<double> sorted(samples);
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double cdf = gauss_cdf(sorted[i], target);
    const double lo = cdf - static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n - cdf;
    sup = std::max(sup, std::max(lo, hi));
  }
  return sup;
}

int worker_count() {
  long count = 0;
  if (const char* env = std::getenv("MATMOMENTS_THREADS")) {
    count = std::strtol(env, nullptr, 10);
  }
  if (count <= 0) {
    count = static_cast<long>(std::thread::hardware_concurrency());
  }
  return static_cast<int>(std::max<long>(1, count));
}

StatReport run_beta_clt(const ExperimentConfig& config) {
  config.validate();
  Stopwatch watch;
  StatReport report;
  report.config = config;

  const double gamma = field_gamma(config.field, config.p);
  BetaParams params{config.field, config.p, gamma * config.n,
                    gamma * config.n};
  const auto coords = coordinate_layout(1, config.p, config.field, "X");
  const Rng root(config.rng);

  Eigen::MatrixXd rows(config.samples, static_cast<int>(coords.size()));
  parallel_for(config.samples, [&](long i) {
    Rng rng = root.substream(kTagBeta, static_cast<std::uint64_t>(i));
    const SymHermMatrix x = sample_matrix_beta(params, rng);
    const SymHermMatrix z =
        standardize_beta_sample(x, gamma, config.n) * config.scale_factor;
    for (std::size_t c = 0; c < coords.size(); ++c) {
      rows(i, static_cast<int>(c)) = coordinate_value(z, coords[c]);
    }
  });
  fill_sample_statistics(rows, coords, &report);

  const double ks_limit = config.threshold("ks", 0.02);
  report.verdicts.push_back(
      {"ks_max", max_ks(report), ks_limit, max_ks(report) <= ks_limit});

  // Mean-square deviation from the center along a ladder of n values,
  // against the closed-form expectation.
  for (std::size_t l = 0; l < config.l2_ladder.size(); ++l) {
    const int ladder_n = config.l2_ladder[l];
    BetaParams ladder_params{config.field, config.p, gamma * ladder_n,
                             gamma * ladder_n};
    std::vector<double> deviation(static_cast<std::size_t>(config.samples));
    parallel_for(config.samples, [&](long i) {
      Rng rng = root.substream(kTagLadderBase + l,
                               static_cast<std::uint64_t>(i));
      const SymHermMatrix x = sample_matrix_beta(ladder_params, rng);
      const SymHermMatrix centered =
          x - SymHermMatrix::ScaledIdentity(config.p, config.field, 0.5);
      deviation[static_cast<std::size_t>(i)] =
          centered.frobenius_norm() * centered.frobenius_norm();
    });
    double mean = 0.0;
    for (double d : deviation) mean += d;
    mean /= static_cast<double>(config.samples);
    const double exact = beta_l2_deviation(ladder_params);
    report.l2_ladder.push_back({ladder_n, ladder_params.a, mean, exact,
                                std::abs(mean - exact) / exact});
  }
  if (!report.l2_ladder.empty()) {
    double max_rel = 0.0;
    double violations = 0.0;
    for (std::size_t l = 0; l < report.l2_ladder.size(); ++l) {
      max_rel = std::max(max_rel, report.l2_ladder[l].rel_error);
      if (l > 0 &&
          report.l2_ladder[l].empirical >= report.l2_ladder[l - 1].empirical) {
        violations += 1.0;
      }
    }
    const double rel_limit = config.threshold("l2_rel", 0.20);
    report.verdicts.push_back(
        {"l2_rel_max", max_rel, rel_limit, max_rel <= rel_limit});
    report.verdicts.push_back({"l2_monotone_violations", violations, 0.0,
                               violations <= 0.0});
  }

  report.wall_time_ms = watch.elapsed_ms();
  return report;
}

StatReport run_canonical_vector_clt(const ExperimentConfig& config) {
  config.validate();
  Stopwatch watch;
  StatReport report;
  report.config = config;

  const double gamma = field_gamma(config.field, config.p);
  const double scale =
      std::sqrt(8.0 * gamma * config.n) * config.scale_factor;
  const auto coords =
      coordinate_layout(config.k, config.p, config.field, "U");
  const Rng root(config.rng);

  Eigen::MatrixXd rows(config.samples, static_cast<int>(coords.size()));
  parallel_for(config.samples, [&](long i) {
    Rng rng = root.substream(kTagCanonical, static_cast<std::uint64_t>(i));
    const MomentSequence prefix = sample_uniform_moment_prefix(
        config.n, config.k, config.p, config.field, rng);
    const CanonicalSequence u = moments_to_canonical(prefix);
    for (std::size_t c = 0; c < coords.size(); ++c) {
      const SymHermMatrix z =
          (u.canonical(coords[c].block + 1) -
           SymHermMatrix::ScaledIdentity(config.p, config.field, 0.5)) *
          scale;
      rows(i, static_cast<int>(c)) = coordinate_value(z, coords[c]);
    }
  });
  fill_sample_statistics(rows, coords, &report);

  const double ks_limit = config.threshold("ks", 0.02);
  report.verdicts.push_back(
      {"ks_max", max_ks(report), ks_limit, max_ks(report) <= ks_limit});
  const double cross_limit = config.threshold("cross_block_cov", 0.05);
  report.verdicts.push_back({"cross_block_cov",
                             report.max_cross_block_covariance, cross_limit,
                             report.max_cross_block_covariance <= cross_limit});

  report.wall_time_ms = watch.elapsed_ms();
  return report;
}

StatReport run_moment_vector_clt(const ExperimentConfig& config) {
  config.validate();
  Stopwatch watch;
  StatReport report;
  report.config = config;

  const auto coords =
      coordinate_layout(config.k, config.p, config.field, "S");
  const Rng root(config.rng);

  Eigen::MatrixXd rows(config.samples, static_cast<int>(coords.size()));
  parallel_for(config.samples, [&](long i) {
    Rng rng = root.substream(kTagMoment, static_cast<std::uint64_t>(i));
    const MomentSequence prefix = sample_uniform_moment_prefix(
        config.n, config.k, config.p, config.field, rng);
    const std::vector<SymHermMatrix> standardized =
        standardize_moment_vector(prefix, config.n);
    for (std::size_t c = 0; c < coords.size(); ++c) {
      const SymHermMatrix z =
          standardized[static_cast<std::size_t>(coords[c].block)] *
          config.scale_factor;
      rows(i, static_cast<int>(c)) = coordinate_value(z, coords[c]);
    }
  });
  fill_sample_statistics(rows, coords, &report);

  const double ks_limit = config.threshold("ks", 0.03);
  report.verdicts.push_back(
      {"ks_max", max_ks(report), ks_limit, max_ks(report) <= ks_limit});
  const double cov_limit = config.threshold("cov_max", 0.1);
  report.verdicts.push_back({"cov_max_deviation",
                             report.max_covariance_deviation, cov_limit,
                             report.max_covariance_deviation <= cov_limit});

  report.wall_time_ms = watch.elapsed_ms();
  return report;
}

StatReport run_jacobian_check(const ExperimentConfig& config) {
  config.validate();
  Stopwatch watch;
  StatReport report;
  report.config = config;

  const Eigen::MatrixXcd jac =
      numerical_jacobian_at_center(config.k, config.p, config.h, config.field);
  const Eigen::MatrixXd a = clt_matrix_A(config.k);
  Eigen::MatrixXcd expected =
      Eigen::MatrixXcd::Zero(config.k * config.p, config.k * config.p);
  for (int i = 0; i < config.k; ++i) {
    for (int j = 0; j <= i; ++j) {
      expected.block(i * config.p, j * config.p, config.p, config.p) =
          a(i, j) *
          Eigen::MatrixXcd::Identity(config.p, config.p);
    }
  }
  report.max_jacobian_deviation = (jac - expected).cwiseAbs().maxCoeff();

  const double limit = config.threshold("jacobian_max", 1e-5);
  report.verdicts.push_back({"jacobian_max_deviation",
                             report.max_jacobian_deviation, limit,
                             report.max_jacobian_deviation <= limit});

  report.wall_time_ms = watch.elapsed_ms();
  return report;
}

StatReport run_volume_check(const ExperimentConfig& config) {
  config.validate();
  Stopwatch watch;
  StatReport report;
  report.config = config;

  const int p = config.p;
  const int n = config.n;
  const Rng root(config.rng);

  // The moment space sits inside the unit box with diagonal entries in
  // (0, 1) and off-diagonal components in (-1/2, 1/2); that box has volume
  // one, so the hit rate estimates the volume directly.
  std::vector<unsigned char> hits(static_cast<std::size_t>(config.samples), 0);
  parallel_for(config.samples, [&](long idx) {
    Rng rng = root.substream(kTagVolume, static_cast<std::uint64_t>(idx));
    std::vector<SymHermMatrix> moments;
    moments.reserve(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
      Eigen::MatrixXcd mat(p, p);
      for (int i = 0; i < p; ++i) {
        mat(i, i) = rng.uniform01();
        for (int j = i + 1; j < p; ++j) {
          std::complex<double> value(rng.uniform01() - 0.5, 0.0);
          if (config.field == Field::kComplex) {
            value.imag(rng.uniform01() - 0.5);
          }
          mat(i, j) = value;
          mat(j, i) = std::conj(value);
        }
      }
      moments.push_back(SymHermMatrix(config.field, mat));
    }
    const MomentSequence candidate(config.field, p, std::move(moments));
    hits[static_cast<std::size_t>(idx)] =
        is_interior(candidate) ? 1 : 0;
  });

  long hit_count = 0;
  for (unsigned char h : hits) hit_count += h;
  report.volume_estimate =
      static_cast<double>(hit_count) / static_cast<double>(config.samples);
  report.volume_exact = std::exp(log_volume(n, p, config.field));
  report.volume_mc_stderr =
      std::sqrt(report.volume_estimate * (1.0 - report.volume_estimate) /
                static_cast<double>(config.samples));

  const double sigma = config.threshold("sigma", 3.0);
  const double observed = std::abs(report.volume_estimate - report.volume_exact);
  const double limit = sigma * report.volume_mc_stderr;
  report.verdicts.push_back(
      {"volume_within_sigma", observed, limit, observed <= limit});

  report.wall_time_ms = watch.elapsed_ms();
  return report;
}

StatReport run_experiment(const ExperimentConfig& config) {
  switch (config.kind) {
    case ExperimentKind::kBetaToGaussian: return run_beta_clt(config);
    case ExperimentKind::kCanonicalVector: return run_canonical_vector_clt(config);
    case ExperimentKind::kMomentVector: return run_moment_vector_clt(config);
    case ExperimentKind::kJacobianCheck: return run_jacobian_check(config);
    case ExperimentKind::kVolumeCheck: return run_volume_check(config);
  }
  throw ConfigError("unknown experiment kind");
}

}  // namespace matmoments
