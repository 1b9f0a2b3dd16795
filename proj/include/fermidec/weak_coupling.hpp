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

namespace fermidec {

/// Eigen-decomposition of a skew-symmetric system Hamiltonian: H_S |j> =
/// i w_j |j>, with eigenvalues in +/- pairs and frequencies clustered into
/// degeneracy classes within tol_omega.
struct SystemEigenbasis {
  Vec omegas;                                   // real frequencies w_j
  CMat vectors;                                 // orthonormal eigenvectors, one per column
  std::vector<std::vector<int>> degeneracy_classes;
  double tol_omega = 0.0;

  /// Index of the class with |w| < tol_omega, or -1 if none.
  int zero_class() const;
  /// Gap: smallest nonzero |w_j|.
  double gap() const;
};

SystemEigenbasis system_eigenbasis(const QuadraticHamiltonian& h_s,
                                   double tol_omega_relative = tol::omega_rel);

/// Coupling block plus bath Hamiltonian and the exponential regularization
/// e^{-eps s} applied to the half-line integrals.
struct BathCorrelation {
  Mat h_i;       // bath rows x system columns
  Mat h_b;       // bath Hamiltonian, skew-symmetric
  double epsilon = 0.0;

  BathCorrelation(Mat coupling, Mat bath_hamiltonian, double eps);
};

/// Max deviation of e^{(H_S (+) H_B)t} H_int e^{-(H_S (+) H_B)t} from the
/// block form built out of H_I(t) = e^{H_B t} H_I e^{-H_S t}.
double interaction_picture_check(const Mat& h_s, const Mat& h_b, const Mat& h_i, double t);

/// G(w) = H_I^T (H_B + eps - i w)^{-1} H_I, the closed form of the half-line
/// Fourier transform of f(s) = H_I^T e^{-H_B s} H_I.
CMat half_line_fourier(const BathCorrelation& bc, double omega);

struct DerivationReport {
  Vec omegas;
  std::vector<std::vector<int>> degeneracy_classes;
  double epsilon = 0.0;
  double imag_residue_x = 0.0;
  double imag_residue_y = 0.0;
  double secular_defect = 0.0;  // ||[X, H_S]|| / (||X|| ||H_S||)
};

/// Born-Markov + secular generator: X = -sum over degenerate (j,k) pairs of
/// |j><k| G_jk(w_k) mapped back to the Majorana basis, and Y from the same
/// projection applied to the Gamma_B-dependent integral. Requires a
/// stationary bath ([Gamma_B, H_B] = 0).
GaussianChannel derive_generator(const QuadraticHamiltonian& h_s, const BathCorrelation& bc,
                                 const CovarianceMatrix& gamma_b,
                                 double tol_omega_relative = tol::omega_rel,
                                 DerivationReport* report = nullptr);

/// Restriction of X to the zero-frequency (degeneracy) modes and their
/// complement, in the normal-form basis of H_S.
struct BlockDecomposition {
  Mat x_g;
  Mat x_e;
  Mat o;          // orthogonal basis change, ground columns first
  double leakage = 0.0;  // norm of the off-diagonal blocks
};

BlockDecomposition block_decompose(const Mat& x, const QuadraticHamiltonian& h_s,
                                   double tol_omega_relative = tol::omega_rel);

}  // namespace fermidec
