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

#include <map>
#include <string>
#include <vector>

#include "matmoments/ensembles.hpp"

namespace matmoments {

// Monte Carlo experiments with statistical verdicts. Replicas run in
// parallel over disjoint RNG sub-streams keyed by sample index, and every
// statistic is folded in index order, so a report depends only on
// (config, seed) and never on the worker count. MATMOMENTS_THREADS caps the
// worker pool (default: all cores).

enum class ExperimentKind {
  kBetaToGaussian,   // standardized Beta matrices against Gaussian entry laws
  kCanonicalVector,  // standardized canonical-moment vector
  kMomentVector,     // standardized ordinary-moment vector
  kJacobianCheck,    // finite-difference Jacobian of the inverse map
  kVolumeCheck       // rejection-sampling check of the volume formula
};

std::string experiment_kind_name(ExperimentKind kind);
ExperimentKind experiment_kind_from_name(const std::string& name);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kBetaToGaussian;
  Field field = Field::kReal;
  int p = 1;
  int n = 100;
  int k = 1;
  long samples = 10000;
  RngState rng;
  double h = 1e-5;  // finite-difference step for the Jacobian check
  std::vector<int> l2_ladder = {50, 200, 800};
  // Multiplies the theoretical standardization scale. 1.0 is the theory
  // value; anything else is a deliberate negative control.
  double scale_factor = 1.0;
  // Overrides for named thresholds ("ks", "cov_max", "cross_block_cov",
  // "l2_rel", "jacobian_max", "sigma").
  std::map<std::string, double> tolerances;

  double threshold(const std::string& name, double fallback) const;
  void validate() const;  // throws ConfigError
};

// One named pass/fail decision, auditable from the numbers alone:
// pass iff observed <= threshold.
struct Verdict {
  std::string name;
  double observed = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct KsEntry {
  std::string coordinate;
  std::string target;  // "N(0,1)" or "N(0,1/2)"
  double distance = 0.0;
};

struct L2LadderPoint {
  int n = 0;
  double a = 0.0;
  double empirical = 0.0;
  double exact = 0.0;
  double rel_error = 0.0;
};

struct StatReport {
  ExperimentConfig config;
  std::vector<KsEntry> ks;
  std::vector<double> empirical_mean;
  Eigen::MatrixXd empirical_covariance;  // 0 x 0 when not applicable
  Eigen::MatrixXd target_covariance;
  double max_covariance_deviation = 0.0;
  double max_cross_block_covariance = 0.0;
  std::vector<L2LadderPoint> l2_ladder;
  double max_jacobian_deviation = 0.0;
  double volume_estimate = 0.0;
  double volume_exact = 0.0;
  double volume_mc_stderr = 0.0;
  std::vector<Verdict> verdicts;
  double wall_time_ms = 0.0;  // diagnostic only; excluded from file output

  bool passed() const;
};

// sqrt(8 gamma n) (X - I/2): the standardization of a Beta(a, a) matrix with
// a = gamma n on its way to the Gaussian ensemble limit.
SymHermMatrix standardize_beta_sample(const SymHermMatrix& x, double gamma,
                                      int n);

// Kolmogorov-Smirnov sup distance between the empirical CDF of samples and
// a centered Gaussian target. Throws TooFewSamplesError below 100 samples.
enum class GaussTarget { kUnitVariance, kHalfVariance };
double ks_statistic(const std::vector<double>& samples, GaussTarget target);

StatReport run_beta_clt(const ExperimentConfig& config);
StatReport run_canonical_vector_clt(const ExperimentConfig& config);
StatReport run_moment_vector_clt(const ExperimentConfig& config);
StatReport run_jacobian_check(const ExperimentConfig& config);
StatReport run_volume_check(const ExperimentConfig& config);

// Dispatch on config.kind.
StatReport run_experiment(const ExperimentConfig& config);

// Worker count: min(MATMOMENTS_THREADS, hardware concurrency), at least 1.
int worker_count();

}  // namespace matmoments
