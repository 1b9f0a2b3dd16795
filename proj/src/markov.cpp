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

#include "fermidec/markov.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace fermidec::markov {

double TwoStateChain::detailed_balance_defect() const {
  // Columns are source states: P_{1->2} = transition(1,0), P_{2->1} = transition(0,1).
  return std::abs(transition(1, 0) * alpha - transition(0, 1) * (1.0 - alpha));
}

TwoStateChain build_p_eta(double alpha, double eta) {
  if (alpha < 0.0 || alpha > 1.0) throw PhysicsError("build_p_eta: alpha outside [0,1]");
  const double eta_max =
      std::min(alpha > 0.0 ? 1.0 / alpha : std::numeric_limits<double>::infinity(),
               alpha < 1.0 ? 1.0 / (1.0 - alpha) : std::numeric_limits<double>::infinity());
  if (eta < 0.0 || eta > eta_max) {
    std::ostringstream msg;
    msg << "build_p_eta: eta = " << eta << " outside [0, min(1/alpha, 1/(1-alpha))] = [0, "
        << eta_max << "]";
    throw PhysicsError(msg.str());
  }
  TwoStateChain c;
  c.alpha = alpha;
  c.eta = eta;
  c.transition << eta * alpha + (1.0 - eta), eta * alpha,
                  eta * (1.0 - alpha),       eta * (1.0 - alpha) + (1.0 - eta);
  return c;
}

Trajectory converge(const TwoStateChain& chain, const Eigen::Vector2d& v0, int t_steps) {
  if (v0(0) < 0.0 || v0(1) < 0.0 || std::abs(v0.sum() - 1.0) > 1e-12)
    throw StructuralError("converge: v0 is not a probability vector");
  Trajectory traj;
  const Eigen::Vector2d pi = chain.stationary();
  Eigen::Vector2d v = v0;
  for (int t = 0; t <= t_steps; ++t) {
    traj.states.push_back(v);
    traj.dist_to_pi_l1.push_back((v - pi).cwiseAbs().sum());
    traj.dist_to_pi_max.push_back((v - pi).cwiseAbs().maxCoeff());
    v = chain.transition * v;
  }
  return traj;
}

TwoStateChain gaussian_to_transition(double x_scalar, double y_scalar) {
  Eigen::Matrix2d p;
  p << 1.0 + x_scalar + y_scalar, 1.0 - x_scalar + y_scalar,
       1.0 - x_scalar - y_scalar, 1.0 + x_scalar - y_scalar;
  p *= 0.5;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (p(i, j) < -1e-12 || p(i, j) > 1.0 + 1e-12)
        throw PhysicsError("gaussian_to_transition: (x, y) give entries outside [0,1]");

  TwoStateChain c;
  c.transition = p;
  c.eta = 1.0 - x_scalar;
  c.alpha = x_scalar != 1.0 ? (1.0 - x_scalar + y_scalar) / (2.0 * (1.0 - x_scalar)) : 0.5;
  return c;
}

Eigen::Matrix2d continuous_transition(const Eigen::Matrix2d& generator, double t) {
  return (generator * t).exp();
}

}  // namespace fermidec::markov
