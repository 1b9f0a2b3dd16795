// Copyright 2026 The fermidec authors
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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fermidec/experiments.hpp"
#include "fermidec/io.hpp"
#include "fermidec/majorana.hpp"

namespace fx = fermidec::experiments;

namespace {

int cmd_run(const std::string& config_path) {
  try {
    const fx::ExperimentConfig config = fx::load_config(config_path);
    const std::vector<std::string> written = fx::run_experiment(config);
    for (const auto& path : written) std::cout << path << '\n';
    return fx::kOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return fx::exit_code_for_current_exception();
  }
}

int cmd_validate(const std::string& path, bool as_covariance) {
  try {
    if (as_covariance) {
      std::ifstream in(path);
      if (!in) throw fx::ConfigError("validate: cannot read " + path);
      const fermidec::Mat gamma = fermidec::io::read_matrix_csv(in);
      const fermidec::ValidationReport report = fermidec::validate_covariance(gamma);
      std::cout << "skew_defect: " << fermidec::io::format_double(report.skew_defect) << '\n'
                << "spectral_excess: " << fermidec::io::format_double(report.spectral_excess)
                << '\n'
                << "purity_defect: " << fermidec::io::format_double(report.purity_defect) << '\n'
                << "valid: " << (report.valid ? "yes" : "no") << '\n'
                << "pure: " << (report.pure ? "yes" : "no") << '\n';
      if (!report.valid) throw fermidec::PhysicsError("validate: not a physical covariance matrix");
    } else {
      const fx::ExperimentConfig config = fx::load_config(path);
      std::cout << "ok: " << config.experiment << '\n';
    }
    return fx::kOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return fx::exit_code_for_current_exception();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian fermionic decoherence toolkit"};
  app.require_subcommand(1);

  std::string run_config;
  CLI::App* run = app.add_subcommand("run", "Run an experiment from a JSON config");
  run->add_option("config", run_config, "Path to the config file")->required();

  std::string validate_path;
  bool as_covariance = false;
  CLI::App* validate = app.add_subcommand("validate", "Validate a config or covariance matrix");
  validate->add_option("path", validate_path, "Path to the file")->required();
  validate->add_flag("--covariance", as_covariance, "Treat the file as a covariance matrix CSV");

  CLI::App* list = app.add_subcommand("list-experiments", "List available experiments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? fx::kOk : fx::kConfigError;
  }

  if (run->parsed()) return cmd_run(run_config);
  if (validate->parsed()) return cmd_validate(validate_path, as_covariance);
  if (list->parsed()) {
    for (const auto& name : fx::experiment_names()) std::cout << name << '\n';
    return fx::kOk;
  }
  return fx::kConfigError;
}
