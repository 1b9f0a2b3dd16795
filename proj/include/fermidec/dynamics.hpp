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

#include "fermidec/majorana.hpp"

namespace fermidec {

/// e^{m t} by scaling-and-squaring with Pade approximation. For skew m the
/// result is orthogonal to machine precision.
Mat expm(const Mat& m, double t = 1.0);

/// Gamma(t) = e^{Ht} Gamma(0) e^{H^T t}.
CovarianceMatrix evolve_closed(const CovarianceMatrix& gamma0, const QuadraticHamiltonian& h,
                               double t);

/// { e^{Ht} Gamma(0) e^{H^T t} }_B for a partitioned joint state.
CovarianceMatrix joint_evolve_and_reduce(const PartitionedSystem& gamma0,
                                         const QuadraticHamiltonian& h_joint, double t);

/// The system sub-block of the joint propagator, D(t) = { e^{Ht} }_B.
struct PropagatorSlice {
  Mat d;
  double t = 0.0;
  double norm = 0.0;  // largest singular value of d
};

PropagatorSlice propagator_slice(const QuadraticHamiltonian& h_joint,
                                 const std::vector<int>& sys_indices, double t);

/// Per-sample record of ||delta(t)||, ||D(t)|| and the 2||D||^2 bound.
struct DeltaTrace {
  std::vector<double> times;
  std::vector<double> delta_norms;
  std::vector<double> d_norms;
};

/// delta(t) = D(t) (Gamma_S^rho - Gamma_S^rho~) D(t)^T, evaluated both via
/// the propagator slice and via the difference of two joint evolutions with
/// the supplied bath state; the two routes are cross-checked internally.
DeltaTrace delta_trace(const CovarianceMatrix& gamma_s_rho,
                       const CovarianceMatrix& gamma_s_rho_tilde,
                       const QuadraticHamiltonian& h_joint, const CovarianceMatrix& bath_gamma,
                       const std::vector<double>& times);

/// The delta matrix itself at a single time (propagator-slice route).
Mat delta_matrix(const Mat& gamma_diff, const QuadraticHamiltonian& h_joint, int sys_dim,
                 double t);

}  // namespace fermidec
