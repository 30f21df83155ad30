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

#include "matmoments/io.hpp"

#include <json.hpp>

namespace matmoments {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ConfigError("malformed JSON input");
  return j;
}

json matrix_to_value(const SymHermMatrix& m) {
  json j;
  j["field"] = field_name(m.field());
  j["p"] = m.dim();
  std::vector<double> re;
  re.reserve(static_cast<std::size_t>(m.dim()) * m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    for (int c = 0; c < m.dim(); ++c) re.push_back(m.mat()(i, c).real());
  }
  j["re"] = re;
  if (m.field() == Field::kComplex) {
    std::vector<double> im;
    im.reserve(re.size());
    for (int i = 0; i < m.dim(); ++i) {
      for (int c = 0; c < m.dim(); ++c) im.push_back(m.mat()(i, c).imag());
    }
    j["im"] = im;
  }
  return j;
}

SymHermMatrix matrix_from_value(const json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("p") ||
      !j.contains("re")) {
    throw ConfigError("matrix JSON needs field, p and re members");
  }
  const Field field = field_from_name(j.at("field").get<std::string>());
  const int p = j.at("p").get<int>();
  if (p < 1) throw ConfigError("matrix JSON has invalid dimension");
  const auto re = j.at("re").get<std::vector<double>>();
  if (static_cast<int>(re.size()) != p * p) {
    throw ConfigError("matrix JSON re array has wrong length");
  }
  std::vector<double> im(static_cast<std::size_t>(p) * p, 0.0);
  if (j.contains("im")) {
    if (field == Field::kReal) {
      throw ConfigError("real-field matrix JSON must not carry im");
    }
    im = j.at("im").get<std::vector<double>>();
    if (static_cast<int>(im.size()) != p * p) {
      throw ConfigError("matrix JSON im array has wrong length");
    }
  }
  Eigen::MatrixXcd m(p, p);
  for (int i = 0; i < p; ++i) {
    for (int c = 0; c < p; ++c) {
      const std::size_t idx = static_cast<std::size_t>(i) * p + c;
      m(i, c) = std::complex<double>(re[idx], im[idx]);
    }
  }
  try {
    return SymHermMatrix(field, m);
  } catch (const InvalidMatrixError& err) {
    throw ConfigError(std::string("matrix JSON rejected: ") + err.what());
  }
}

json sequence_to_value(Field field, int p,
                       const std::vector<SymHermMatrix>& entries,
                       const char* key) {
  json j;
  j["field"] = field_name(field);
  j["p"] = p;
  j["n"] = entries.size();
  json list = json::array();
  for (const auto& m : entries) list.push_back(matrix_to_value(m));
  j[key] = std::move(list);
  return j;
}

std::vector<SymHermMatrix> sequence_from_value(const json& j, const char* key,
                                               Field* field, int* p) {
  if (!j.is_object() || !j.contains("field") || !j.contains("p") ||
      !j.contains(key)) {
    throw ConfigError(std::string("sequence JSON needs field, p and ") + key);
  }
  *field = field_from_name(j.at("field").get<std::string>());
  *p = j.at("p").get<int>();
  std::vector<SymHermMatrix> entries;
  for (const auto& item : j.at(key)) {
    entries.push_back(matrix_from_value(item));
  }
  if (j.contains("n") &&
      j.at("n").get<std::size_t>() != entries.size()) {
    throw ConfigError("sequence JSON length disagrees with n");
  }
  return entries;
}

json config_to_value(const ExperimentConfig& config) {
  json j;
  j["kind"] = experiment_kind_name(config.kind);
  j["field"] = field_name(config.field);
  j["p"] = config.p;
  j["n"] = config.n;
  j["k"] = config.k;
  j["samples"] = config.samples;
  j["seed"] = config.rng.seed;
  j["stream"] = config.rng.stream;
  j["h"] = config.h;
  j["l2_ladder"] = config.l2_ladder;
  j["scale_factor"] = config.scale_factor;
  j["tolerances"] = config.tolerances;
  return j;
}

ExperimentConfig config_from_value(const json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw ConfigError("experiment config needs a kind");
  }
  ExperimentConfig config;
  config.kind = experiment_kind_from_name(j.at("kind").get<std::string>());
  if (j.contains("field")) {
    config.field = field_from_name(j.at("field").get<std::string>());
  }
  if (j.contains("p")) config.p = j.at("p").get<int>();
  if (j.contains("n")) config.n = j.at("n").get<int>();
  config.k = j.contains("k") ? j.at("k").get<int>() : std::min(config.n, 1);
  if (j.contains("samples")) config.samples = j.at("samples").get<long>();
  if (j.contains("seed")) config.rng.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("stream")) {
    config.rng.stream = j.at("stream").get<std::uint64_t>();
  }
  if (j.contains("h")) config.h = j.at("h").get<double>();
  if (j.contains("l2_ladder")) {
    config.l2_ladder = j.at("l2_ladder").get<std::vector<int>>();
  }
  if (j.contains("scale_factor")) {
    config.scale_factor = j.at("scale_factor").get<double>();
  }
  if (j.contains("tolerances")) {
    config.tolerances =
        j.at("tolerances").get<std::map<std::string, double>>();
  }
  config.validate();
  return config;
}

}  // namespace

std::string to_json(const SymHermMatrix& m) { return matrix_to_value(m).dump(); }

SymHermMatrix matrix_from_json(const std::string& text) {
  return matrix_from_value(parse(text));
}

std::string to_json(const MomentSequence& s) {
  return sequence_to_value(s.field(), s.dim(), s.moments(), "S").dump();
}

MomentSequence moment_sequence_from_json(const std::string& text) {
  Field field;
  int p;
  auto entries = sequence_from_value(parse(text), "S", &field, &p);
  return MomentSequence(field, p, std::move(entries));
}

std::string to_json(const CanonicalSequence& u) {
  return sequence_to_value(u.field(), u.dim(), u.entries(), "U").dump();
}

CanonicalSequence canonical_sequence_from_json(const std::string& text) {
  Field field;
  int p;
  auto entries = sequence_from_value(parse(text), "U", &field, &p);
  try {
    return CanonicalSequence(field, p, std::move(entries));
  } catch (const DomainError& err) {
    throw ConfigError(std::string("canonical sequence rejected: ") +
                      err.what());
  }
}

std::string to_json(const ExperimentConfig& config) {
  return config_to_value(config).dump();
}

ExperimentConfig experiment_config_from_json(const std::string& text) {
  return config_from_value(parse(text));
}

std::string to_json(const StatReport& report, bool include_timing) {
  json j;
  j["config"] = config_to_value(report.config);

  json results;
  if (!report.ks.empty()) {
    json ks = json::array();
    for (const auto& entry : report.ks) {
      ks.push_back({{"coordinate", entry.coordinate},
                    {"target", entry.target},
                    {"distance", entry.distance}});
    }
    results["ks"] = std::move(ks);
  }
  if (!report.empirical_mean.empty()) {
    results["mean"] = report.empirical_mean;
  }
  if (report.empirical_covariance.size() > 0) {
    json cov = json::array();
    json target = json::array();
    for (Eigen::Index r = 0; r < report.empirical_covariance.rows(); ++r) {
      json cov_row = json::array();
      json target_row = json::array();
      for (Eigen::Index c = 0; c < report.empirical_covariance.cols(); ++c) {
        cov_row.push_back(report.empirical_covariance(r, c));
        target_row.push_back(report.target_covariance(r, c));
      }
      cov.push_back(std::move(cov_row));
      target.push_back(std::move(target_row));
    }
    results["covariance"] = std::move(cov);
    results["target_covariance"] = std::move(target);
    results["max_covariance_deviation"] = report.max_covariance_deviation;
    results["max_cross_block_covariance"] = report.max_cross_block_covariance;
  }
  if (!report.l2_ladder.empty()) {
    json ladder = json::array();
    for (const auto& point : report.l2_ladder) {
      ladder.push_back({{"n", point.n},
                        {"a", point.a},
                        {"empirical", point.empirical},
                        {"exact", point.exact},
                        {"rel_error", point.rel_error}});
    }
    results["l2_ladder"] = std::move(ladder);
  }
  if (report.config.kind == ExperimentKind::kJacobianCheck) {
    results["max_jacobian_deviation"] = report.max_jacobian_deviation;
  }
  if (report.config.kind == ExperimentKind::kVolumeCheck) {
    results["volume"] = {{"estimate", report.volume_estimate},
                         {"exact", report.volume_exact},
                         {"mc_stderr", report.volume_mc_stderr}};
  }
  j["results"] = std::move(results);

  json verdicts = json::array();
  for (const auto& v : report.verdicts) {
    verdicts.push_back({{"name", v.name},
                        {"observed", v.observed},
                        {"threshold", v.threshold},
                        {"pass", v.pass}});
  }
  j["verdicts"] = std::move(verdicts);
  j["pass"] = report.passed();
  if (include_timing) j["wall_time_ms"] = report.wall_time_ms;
  return j.dump(2);
}

std::string batch_header_json(const std::string& kind,
                              const std::string& params_json, RngState rng,
                              long count) {
  json j;
  j["kind"] = kind;
  j["params"] = parse(params_json);
  j["seed"] = rng.seed;
  j["stream"] = rng.stream;
  j["count"] = count;
  return j.dump();
}

}  // namespace matmoments
