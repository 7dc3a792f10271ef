#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "huygens/report.hpp"

namespace huygens {

struct ProfileSpec {
  std::string name;
  std::map<std::string, double> params;
};

struct QuadratureSpec {
  std::string family = "gauss-product";
  int resolution = 16;
};

struct GridSpec {
  int cells = 4000;
  double cfl = 0.5;
};

struct OutputSpec {
  std::string path;
  std::string format = "csv";
};

/// Everything a run needs. Unset physical parameters and profiles fall back to
/// per-experiment defaults at dispatch time.
struct ExperimentConfig {
  std::string experiment;
  std::map<std::string, double> parameters;
  std::optional<ProfileSpec> profile;  // phi in 1D, f in the generalized 3D case
  std::optional<ProfileSpec> psi;      // 1D initial velocity
  QuadratureSpec quadrature;
  GridSpec grid;
  OutputSpec output;
  std::uint64_t seed = 1;
  std::optional<double> tol;
};

/// Applies one `key = value` setting. Keys: experiment, seed, tol, profile,
/// profile.<p>, psi, psi.<p>, quadrature.family, quadrature.resolution,
/// grid.cells, grid.cfl, output.path, output.format; anything else is a
/// numeric physical parameter (A, omega, c, R, t1, t2, tau, a, ...).
void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value);

/// Flat `key = value` lines ('#' starts a comment), or a JSON object when the
/// first non-blank character is '{'.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical JSON form of a config; parse_config accepts it back.
std::string config_to_json(const ExperimentConfig& config);

struct ExperimentInfo {
  std::string name;
  std::string summary;
};

const std::vector<ExperimentInfo>& experiment_catalog();

/// Validates the config and runs the experiment. Deterministic for a fixed
/// config (sweeps draw from `seed`). Throws ParameterError / DomainError for
/// invalid input, NumericError when a numeric step misses its tolerance.
ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace huygens
