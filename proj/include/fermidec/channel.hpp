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

/// Coefficient vectors of Lindblad operators linear in Majorana modes,
/// L_mu = sum_j l_{mu,j} c_j.
struct LindbladSpec {
  std::vector<CVec> ls;

  int dim() const { return ls.empty() ? 0 : static_cast<int>(ls[0].size()); }
  bool empty() const { return ls.empty(); }
  void validate() const;
};

/// M_{j,k} = sum_mu l*_{mu,j} l_{mu,k}. Hermitian positive semidefinite.
CMat build_m(const LindbladSpec& spec);

/// Scaling of the dissipative X/Y contributions relative to M.
///
/// `calibrated` matches the exact Hilbert-space master equation
/// drho/dt = -i[H,rho] + sum_mu (2 L rho L+ - {L+L, rho}) under the
/// normalization {c_j,c_k} = 2 delta_jk:
///     X = H - 2(M + M*),   Y = -8 Im M.
/// `paper` halves the dissipative strength and flips the sign of H,
/// reproducing the literature form X = -H - (M + M*) and the quoted
/// e^{-eta^2 t/2} Kitaev decay envelope.
enum class Convention { calibrated, paper };

/// Generator pair of the covariance dynamics
/// dGamma/dt = X Gamma + Gamma X^T + Y.
struct GaussianChannel {
  Mat x;
  Mat y;
  Convention convention = Convention::calibrated;

  int dim() const { return static_cast<int>(x.rows()); }
  /// Dissipative part P = -(X + X^T)/2.
  Mat dissipative_part() const { return -0.5 * (x + x.transpose()); }
};

GaussianChannel build_channel(const QuadraticHamiltonian& h, const LindbladSpec& spec,
                              Convention convention = Convention::calibrated);

/// Solves X G + G X^T = -Y (Schur-based Bartels-Stewart). Requires X Hurwitz;
/// otherwise throws PhysicsError reporting the offending spectrum.
CovarianceMatrix steady_state(const GaussianChannel& ch);

/// Lower-level Lyapunov solve A P + P A^T + Q = 0 without state validation.
Mat solve_lyapunov(const Mat& a, const Mat& q);

/// Gamma(t) = e^{Xt} (Gamma(0) - Gamma_ss) e^{X^T t} + Gamma_ss.
CovarianceMatrix propagate(const GaussianChannel& ch, const CovarianceMatrix& gamma0, double t);
CovarianceMatrix propagate(const GaussianChannel& ch, const CovarianceMatrix& gamma0, double t,
                           const CovarianceMatrix& gamma_ss);

}  // namespace fermidec
