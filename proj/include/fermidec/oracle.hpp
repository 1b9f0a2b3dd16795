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

#include "fermidec/channel.hpp"
#include "fermidec/majorana.hpp"

namespace fermidec::oracle {

/// Hard cap on Dirac modes for the dense Hilbert-space reference (the
/// vectorized Liouvillian has dimension 4^n).
inline constexpr int kMaxDiracModes = 6;

/// Dense Fock-space realization of n Dirac modes: annihilators a_k via the
/// standard string construction and Majorana operators with
/// {c_j, c_k} = 2 delta_jk, c_j* = c_j, c_j^2 = 1. Anticommutation relations
/// are verified at construction.
class FockOperatorSet {
 public:
  explicit FockOperatorSet(int n_dirac);

  int n_dirac() const { return n_; }
  int hilbert_dim() const { return 1 << n_; }
  const CMat& a(int k) const { return a_[k]; }
  CMat a_dag(int k) const { return a_[k].adjoint(); }
  const CMat& c(int j) const { return c_[j]; }

  /// H_hat = (i/4) sum_jk H_jk c_j c_k.
  CMat realize_hamiltonian(const QuadraticHamiltonian& h) const;
  /// L_mu = sum_j l_j c_j.
  CMat realize_lindblad(const CVec& l) const;

 private:
  int n_;
  std::vector<CMat> a_;
  std::vector<CMat> c_;
};

/// Hermitian, unit-trace, positive semidefinite matrix. Construction checks
/// the invariants.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMat rho, double tolerance = 1e-9);
  static DensityMatrix pure(const CVec& psi);

  const CMat& matrix() const { return rho_; }
  int dim() const { return static_cast<int>(rho_.rows()); }

 private:
  CMat rho_;
};

/// Gamma_{j,k} = (i/2) tr[(c_j c_k - c_k c_j) rho].
CovarianceMatrix covariance_of(const DensityMatrix& rho, const FockOperatorSet& ops);

/// drho/dt = -i[H,rho] + sum_mu (2 L rho L+ - {L+L, rho}), solved exactly by
/// eigendecomposition of the vectorized Liouvillian.
DensityMatrix lindblad_evolve(const DensityMatrix& rho0, const QuadraticHamiltonian& h,
                              const LindbladSpec& spec, double t, const FockOperatorSet& ops);

/// e^{-beta H}/Z with a shifted exponent for large beta.
DensityMatrix gibbs_state(const QuadraticHamiltonian& h, double beta, const FockOperatorSet& ops);

/// ||rho - rho~||_tr = sum of singular values of the difference.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& rho_tilde);
double trace_norm(const CMat& a);

/// Numeric check of trace-norm multiplicativity over tensor products and
/// additivity over direct sums.
struct TensorNormReport {
  double product_defect = 0.0;  // | ||A(x)B|| - ||A||*||B|| |
  double sum_defect = 0.0;      // | ||A(+)B|| - (||A||+||B||) |
};
TensorNormReport tensor_norm_identities_check(const CMat& a, const CMat& b);

CMat kron(const CMat& a, const CMat& b);

}  // namespace fermidec::oracle
