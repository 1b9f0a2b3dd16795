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

#pragma once

#include <string>
#include <vector>

#include "fermidec/channel.hpp"

namespace fermidec::experiments {

// Exit codes of the CLI contract.
inline constexpr int kOk = 0;
inline constexpr int kConfigError = 2;
inline constexpr int kPhysicsError = 3;
inline constexpr int kToleranceError = 4;

/// Thrown on config schema violations; carries the JSON field path.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string experiment;
  std::string model = "kitaev";
  int n_sites = 4;
  double t_hop = 1.0;
  double delta_sc = 1.0;
  double mu = 0.0;
  double eta = 0.0;

  // bath
  int bath_lx = 1;
  int bath_ly = 1;
  double bath_hopping = 1.0;
  std::string bath_boundary = "open";
  std::vector<double> betas;

  // coupling
  double coupling_strength = 0.0;
  int coupling_bath_site = 0;
  double epsilon_fraction = 0.05;  // regularization as a fraction of bath bandwidth

  // time grid: n_times points, uniform on [0, t_max]
  double t_max = 10.0;
  int n_times = 50;

  std::string output_prefix = "fermidec_out";
  Convention convention = Convention::calibrated;
  unsigned seed = 0;

  std::vector<double> time_grid() const;
};

/// Strict parser: unknown keys are rejected with their field path.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

std::vector<std::string> experiment_names();

/// Runs the experiment, writing CSV/JSON artifacts under the output prefix.
/// Returns the paths written. Throws ConfigError / PhysicsError on contract
/// violations.
std::vector<std::string> run_experiment(const ExperimentConfig& config);

/// Maps an in-flight exception to the CLI exit code contract.
int exit_code_for_current_exception();

}  // namespace fermidec::experiments
