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

#include <vector>

#include "fermidec/types.hpp"

namespace fermidec::markov {

/// Two-state detailed-balance chain P_eta = (1-eta) P_1 + eta P_pi with
/// stationary distribution (alpha, 1-alpha).
struct TwoStateChain {
  double alpha = 0.5;
  double eta = 0.0;
  Eigen::Matrix2d transition;

  Eigen::Vector2d stationary() const { return {alpha, 1.0 - alpha}; }
  /// |P_{1->2} alpha - P_{2->1} (1-alpha)|.
  double detailed_balance_defect() const;
};

TwoStateChain build_p_eta(double alpha, double eta);

struct Trajectory {
  std::vector<Eigen::Vector2d> states;      // v(0), v(1), ..., v(T)
  std::vector<double> dist_to_pi_l1;
  std::vector<double> dist_to_pi_max;
};

Trajectory converge(const TwoStateChain& chain, const Eigen::Vector2d& v0, int t_steps);

/// Transition matrix of a single-mode Gaussian channel acting on the
/// occupation probability: lambda -> x lambda + y maps to
/// P = 1/2 [[1+x+y, 1-x+y], [1-x-y, 1+x-y]]. Throws PhysicsError if the
/// entries leave [0,1].
TwoStateChain gaussian_to_transition(double x_scalar, double y_scalar);

/// Continuous-time variant: Q(t) = e^{Pt} with P read as a generator.
Eigen::Matrix2d continuous_transition(const Eigen::Matrix2d& generator, double t);

}  // namespace fermidec::markov
