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

#include "fermidec/dynamics.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace fermidec {

Mat expm(const Mat& m, double t) {
  require_square(m, "expm");
  if (!m.allFinite() || !std::isfinite(t))
    throw StructuralError("expm: non-finite input");
  return (m * t).exp();
}

CovarianceMatrix evolve_closed(const CovarianceMatrix& gamma0, const QuadraticHamiltonian& h,
                               double t) {
  if (gamma0.dim() != h.dim())
    throw StructuralError("evolve_closed: dimension mismatch");
  const Mat u = expm(h.matrix(), t);
  Mat g = u * gamma0.matrix() * u.transpose();
  g = 0.5 * (g - g.transpose());
  return CovarianceMatrix::unchecked(std::move(g));
}

CovarianceMatrix joint_evolve_and_reduce(const PartitionedSystem& gamma0,
                                         const QuadraticHamiltonian& h_joint, double t) {
  if (h_joint.dim() != gamma0.joint.rows())
    throw StructuralError("joint_evolve_and_reduce: partition mismatch");
  const Mat u = expm(h_joint.matrix(), t);
  const Mat g = u * gamma0.joint * u.transpose();
  Mat gs = reduce_to_system(g, gamma0.partition.sys_indices);
  gs = 0.5 * (gs - gs.transpose());
  return CovarianceMatrix::unchecked(std::move(gs));
}

PropagatorSlice propagator_slice(const QuadraticHamiltonian& h_joint,
                                 const std::vector<int>& sys_indices, double t) {
  const Mat u = expm(h_joint.matrix(), t);
  PropagatorSlice s;
  s.t = t;
  s.d = reduce_to_system(u, sys_indices);
  s.norm = operator_norm(s.d);
  return s;
}

Mat delta_matrix(const Mat& gamma_diff, const QuadraticHamiltonian& h_joint, int sys_dim,
                 double t) {
  std::vector<int> sys(sys_dim);
  for (int i = 0; i < sys_dim; ++i) sys[i] = i;
  const PropagatorSlice s = propagator_slice(h_joint, sys, t);
  return s.d * gamma_diff * s.d.transpose();
}

DeltaTrace delta_trace(const CovarianceMatrix& gamma_s_rho,
                       const CovarianceMatrix& gamma_s_rho_tilde,
                       const QuadraticHamiltonian& h_joint, const CovarianceMatrix& bath_gamma,
                       const std::vector<double>& times) {
  if (gamma_s_rho.dim() != gamma_s_rho_tilde.dim())
    throw StructuralError("delta_trace: system states differ in dimension");
  const int ns = gamma_s_rho.dim();
  const int nb = bath_gamma.dim();
  if (ns + nb != h_joint.dim())
    throw StructuralError("delta_trace: joint Hamiltonian does not match system+bath size");

  const Mat diff = gamma_s_rho.matrix() - gamma_s_rho_tilde.matrix();
  const Partition part = Partition::leading(ns, ns + nb);
  const PartitionedSystem joint_rho(direct_sum(gamma_s_rho.matrix(), bath_gamma.matrix()), part);
  const PartitionedSystem joint_rho_tilde(
      direct_sum(gamma_s_rho_tilde.matrix(), bath_gamma.matrix()), part);

  DeltaTrace trace;
  for (double t : times) {
    const Mat via_slice = delta_matrix(diff, h_joint, ns, t);
    const Mat via_joint = joint_evolve_and_reduce(joint_rho, h_joint, t).matrix() -
                          joint_evolve_and_reduce(joint_rho_tilde, h_joint, t).matrix();
    const double mismatch = (via_slice - via_joint).cwiseAbs().maxCoeff();
    if (mismatch > 1e-10)
      throw PhysicsError("delta_trace: propagator-slice and joint-evolution routes disagree");
    std::vector<int> sys(ns);
    for (int i = 0; i < ns; ++i) sys[i] = i;
    trace.times.push_back(t);
    trace.delta_norms.push_back(operator_norm(via_slice));
    trace.d_norms.push_back(propagator_slice(h_joint, sys, t).norm);
  }
  return trace;
}

}  // namespace fermidec
