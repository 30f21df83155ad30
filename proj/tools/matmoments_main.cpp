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

// Command-line surface of the library. Exit codes: 0 success, 1 I/O
// failure, 2 usage or domain error, 3 statistical verification failure.
// stdout and --out files carry only data; diagnostics go to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "matmoments/ensembles.hpp"
#include "matmoments/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitStatFail = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) {
    throw std::ios_base::failure("cannot read " + path);
  }
  return buffer.str();
}

// Content is assembled in memory first so invalid inputs never leave a
// partial output file behind.
void write_output(const std::optional<std::string>& path,
                  const std::string& content) {
  if (!path) {
    std::cout << content;
    return;
  }
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::ios_base::failure("cannot open " + *path);
  out << content;
  if (!out.good()) throw std::ios_base::failure("cannot write " + *path);
}

struct SampleOptions {
  std::string kind;
  int p = 1;
  int n = 1;
  double a = 1.0;
  double b = 1.0;
  std::string field = "real";
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  long count = 1;
  std::optional<std::string> out;
};

std::string render_sample_batch(const SampleOptions& opt) {
  using matmoments::Field;
  const Field field = matmoments::field_from_name(opt.field);
  const matmoments::RngState rng_state{opt.seed, opt.stream};
  const matmoments::Rng root(rng_state);
  nlohmann::json params;
  params["p"] = opt.p;

  std::ostringstream lines;
  if (opt.kind == "goe" || opt.kind == "gue") {
    const Field ensemble_field =
        opt.kind == "goe" ? Field::kReal : Field::kComplex;
    for (long i = 0; i < opt.count; ++i) {
      matmoments::Rng rng = root.substream(1, static_cast<std::uint64_t>(i));
      lines << matmoments::to_json(
                   matmoments::sample_gaussian_ensemble(opt.p, ensemble_field,
                                                        rng))
            << "\n";
    }
  } else if (opt.kind == "beta") {
    matmoments::BetaParams beta{field, opt.p, opt.a, opt.b};
    matmoments::validate(beta);
    params["a"] = opt.a;
    params["b"] = opt.b;
    params["field"] = opt.field;
    for (long i = 0; i < opt.count; ++i) {
      matmoments::Rng rng = root.substream(1, static_cast<std::uint64_t>(i));
      lines << matmoments::to_json(matmoments::sample_matrix_beta(beta, rng))
            << "\n";
    }
  } else if (opt.kind == "uniform-moments") {
    params["n"] = opt.n;
    params["field"] = opt.field;
    for (long i = 0; i < opt.count; ++i) {
      matmoments::Rng rng = root.substream(1, static_cast<std::uint64_t>(i));
      lines << matmoments::to_json(matmoments::sample_uniform_moment_space(
                   opt.n, opt.p, field, rng))
            << "\n";
    }
  } else {
    throw matmoments::ConfigError("unknown sample kind: " + opt.kind);
  }

  return matmoments::batch_header_json(opt.kind, params.dump(), rng_state,
                                       opt.count) +
         "\n" + lines.str();
}

// check-interior accepts either a single MomentSequence object or an NDJSON
// batch of them (a header line with a "kind" member followed by sequences).
std::string check_interior_text(const std::string& text,
                                const matmoments::Tolerance& tol) {
  std::istringstream in(text);
  std::string first_line;
  std::getline(in, first_line);
  const nlohmann::json first =
      nlohmann::json::parse(first_line, nullptr, false);

  nlohmann::json out;
  if (first.is_object() && first.contains("kind")) {
    long total = 0;
    long interior = 0;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto sequence = matmoments::moment_sequence_from_json(line);
      ++total;
      if (matmoments::is_interior(sequence, tol)) ++interior;
    }
    out["checked"] = total;
    out["interior_count"] = interior;
    out["all_interior"] = total == interior;
  } else {
    const auto sequence = matmoments::moment_sequence_from_json(text);
    out["interior"] = matmoments::is_interior(sequence, tol);
  }
  return out.dump() + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moment-space geometry of matrix measures on [0,1]"};
  app.require_subcommand(1);

  // volume
  int vol_n = 1;
  int vol_p = 1;
  std::string vol_field = "real";
  auto* volume = app.add_subcommand("volume", "volume of the moment space");
  volume->add_option("--n", vol_n, "moment space order")->required();
  volume->add_option("--p", vol_p, "matrix dimension")->required();
  volume->add_option("--field", vol_field, "real or complex");

  // arcsine
  int arc_k = 1;
  auto* arcsine = app.add_subcommand("arcsine", "arcsine moments");
  arcsine->add_option("--k", arc_k, "number of moments")->required();

  // clt-matrix
  int clt_k = 1;
  auto* clt = app.add_subcommand("clt-matrix", "standardization matrix A");
  clt->add_option("--k", clt_k, "matrix order")->required();

  // map / unmap / check-interior
  std::string in_path;
  std::optional<std::string> out_path;
  double tol_rel = 1e-10;
  double tol_abs = 1e-12;
  auto add_file_flags = [&](CLI::App* cmd) {
    cmd->add_option("--in", in_path, "input JSON file")->required();
    cmd->add_option("--out", out_path, "output file (default stdout)");
    cmd->add_option("--tol-rel", tol_rel, "relative eigenvalue floor");
    cmd->add_option("--tol-abs", tol_abs, "absolute eigenvalue floor");
  };
  auto* map_cmd =
      app.add_subcommand("map", "moments -> canonical moments");
  add_file_flags(map_cmd);
  auto* unmap_cmd =
      app.add_subcommand("unmap", "canonical moments -> moments");
  add_file_flags(unmap_cmd);
  auto* check_cmd =
      app.add_subcommand("check-interior", "interiority of moment sequences");
  add_file_flags(check_cmd);

  // sample
  SampleOptions sample;
  auto* sample_cmd = app.add_subcommand("sample", "seeded ensemble batches");
  sample_cmd
      ->add_option("--kind", sample.kind,
                   "goe | gue | beta | uniform-moments")
      ->required();
  sample_cmd->add_option("--p", sample.p, "matrix dimension");
  sample_cmd->add_option("--n", sample.n, "moment space order");
  sample_cmd->add_option("--a", sample.a, "Beta parameter a");
  sample_cmd->add_option("--b", sample.b, "Beta parameter b");
  sample_cmd->add_option("--field", sample.field, "real or complex");
  sample_cmd->add_option("--seed", sample.seed, "RNG seed");
  sample_cmd->add_option("--stream", sample.stream, "RNG stream id");
  sample_cmd->add_option("--count", sample.count, "number of draws");
  sample_cmd->add_option("--out", sample.out, "output file (default stdout)");

  // verify
  std::string verify_config_path;
  std::optional<std::string> verify_out;
  auto* verify_cmd =
      app.add_subcommand("verify", "run a convergence experiment");
  verify_cmd->add_option("--config", verify_config_path, "config JSON file")
      ->required();
  verify_cmd->add_option("--out", verify_out, "report file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (volume->parsed()) {
      const double log_vol = matmoments::log_volume(
          vol_n, vol_p, matmoments::field_from_name(vol_field));
      const double vol = std::exp(log_vol);
      nlohmann::json out;
      out["log_volume"] = log_vol;
      if (vol > 0.0) {
        out["volume"] = vol;
      } else {
        out["volume"] = "underflow";
      }
      std::cout << out.dump() << "\n";
      return kExitOk;
    }

    if (arcsine->parsed()) {
      nlohmann::json out;
      out["moments"] = matmoments::arcsine_moments(arc_k);
      std::cout << out.dump() << "\n";
      return kExitOk;
    }

    if (clt->parsed()) {
      const Eigen::MatrixXd a = matmoments::clt_matrix_A(clt_k);
      nlohmann::json rows = nlohmann::json::array();
      for (int i = 0; i < clt_k; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < clt_k; ++j) row.push_back(a(i, j));
        rows.push_back(std::move(row));
      }
      nlohmann::json out;
      out["A"] = std::move(rows);
      std::cout << out.dump() << "\n";
      return kExitOk;
    }

    const matmoments::Tolerance tol{tol_rel, tol_abs};

    if (map_cmd->parsed()) {
      const auto sequence =
          matmoments::moment_sequence_from_json(read_file(in_path));
      const auto canonical = matmoments::moments_to_canonical(sequence, tol);
      write_output(out_path, matmoments::to_json(canonical) + "\n");
      return kExitOk;
    }

    if (unmap_cmd->parsed()) {
      const auto canonical =
          matmoments::canonical_sequence_from_json(read_file(in_path));
      const auto sequence = matmoments::canonical_to_moments(canonical, tol);
      write_output(out_path, matmoments::to_json(sequence) + "\n");
      return kExitOk;
    }

    if (check_cmd->parsed()) {
      write_output(out_path, check_interior_text(read_file(in_path), tol));
      return kExitOk;
    }

    if (sample_cmd->parsed()) {
      write_output(sample.out, render_sample_batch(sample));
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const auto config = matmoments::experiment_config_from_json(
          read_file(verify_config_path));
      const auto report = matmoments::run_experiment(config);
      std::cerr << "verify: " << matmoments::experiment_kind_name(config.kind)
                << " wall_time_ms=" << report.wall_time_ms << "\n";
      write_output(verify_out, matmoments::to_json(report) + "\n");
      return report.passed() ? kExitOk : kExitStatFail;
    }
  } catch (const std::ios_base::failure& err) {
    std::cerr << "io error: " << err.what() << "\n";
    return kExitIo;
  } catch (const matmoments::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }

  return kExitUsage;
}
