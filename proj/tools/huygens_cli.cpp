// Command-line front end for the re-seeding experiments.
//
//   huygens list
//   huygens run --experiment kirchhoff-case1 --param R=2 --param tau=0.5 --out r.csv
//
// Exit status is 0 only when every check of the run passes.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "huygens/errors.hpp"
#include "huygens/experiment.hpp"
#include "huygens/report.hpp"

namespace {

constexpr const char* kOutputDirEnv = "HUYGENS_OUTPUT_DIR";

int run(const std::string& experiment, const std::string& config_path,
        const std::vector<std::string>& overrides, const std::string& out,
        const std::string& format, const std::string& seed, const std::string& tol) {
  using namespace huygens;
  ExperimentConfig config = config_path.empty() ? ExperimentConfig{} : load_config(config_path);
  if (!experiment.empty()) config.experiment = experiment;
  for (const std::string& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ParameterError("--param expects key=value, got '" + kv + "'");
    apply_setting(config, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (!seed.empty()) apply_setting(config, "seed", seed);
  if (!tol.empty()) apply_setting(config, "tol", tol);
  if (!format.empty()) apply_setting(config, "output.format", format);
  if (!out.empty()) config.output.path = out;
  if (config.experiment.empty()) throw ParameterError("no experiment given (--experiment)");

  const ReportFormat fmt = parse_report_format(config.output.format);
  std::filesystem::path path = config.output.path;
  if (path.empty()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / (config.experiment + "." + config.output.format);
    }
  }

  const ExperimentReport report = run_experiment(config);
  if (path.empty()) {
    std::cout << (fmt == ReportFormat::Csv ? report_to_csv(report) : report_to_json(report));
  } else {
    emit_report(report, fmt, path);
  }

  std::size_t failed = 0;
  for (const ReportRow& row : report.rows) failed += row.pass ? 0 : 1;
  std::cerr << report.experiment << ": " << report.rows.size() - failed << "/"
            << report.rows.size() << " checks passed in " << report.wall_time_s << " s";
  if (!path.empty()) std::cerr << " -> " << path.string();
  std::cerr << '\n';
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Re-seeding (Huygens) checks for the 1D and 3D wave equation"};
  app.require_subcommand(1);

  CLI::App* list = app.add_subcommand("list", "List available experiments");

  CLI::App* run_cmd = app.add_subcommand("run", "Run one experiment and emit its report");
  std::string experiment;
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out;
  std::string format;
  std::string seed;
  std::string tol;
  run_cmd->add_option("--experiment,-e", experiment, "Experiment name (see `list`)");
  run_cmd->add_option("--config,-c", config_path, "Config file (key = value lines or JSON)")
      ->check(CLI::ExistingFile);
  run_cmd->add_option("--param,-p", overrides, "Override a setting, key=value (repeatable)");
  run_cmd->add_option("--out,-o", out,
                      std::string("Report path (default: $") + kOutputDirEnv +
                          "/<experiment>.<format>, else stdout)");
  run_cmd->add_option("--format,-f", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  run_cmd->add_option("--seed", seed, "Seed for randomized sweeps");
  run_cmd->add_option("--tol", tol, "Override the experiment's primary tolerance");

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) {
    for (const auto& info : huygens::experiment_catalog()) {
      std::cout << info.name << "\t" << info.summary << '\n';
    }
    return 0;
  }
  try {
    return run(experiment, config_path, overrides, out, format, seed, tol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
