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

#include <optional>
#include <string>
#include <vector>

#include "fermidec/types.hpp"

namespace fermidec {

/// Bookkeeping for the Dirac <-> Majorana index correspondence.
/// Dirac mode m (0-based) owns Majorana indices (2m, 2m+1).
struct ModeLayout {
  int n_dirac = 0;
  std::vector<std::string> labels;

  int majorana_count() const { return 2 * n_dirac; }
  int majorana_a(int dirac_mode) const { return 2 * dirac_mode; }
  int majorana_b(int dirac_mode) const { return 2 * dirac_mode + 1; }
};

struct ValidationReport {
  double skew_defect = 0.0;       // ||G + G^T||_inf
  double spectral_excess = 0.0;   // max(0, max singular value - 1)
  double purity_defect = 0.0;     // ||G G^T - I||
  bool valid = false;
  bool pure = false;
};

/// Checks skew-symmetry and the physicality bound (singular values <= 1) of a
/// candidate covariance matrix. Throws StructuralError for non-square or
/// odd-dimensioned input; soft failures land in the report.
ValidationReport validate_covariance(const Mat& gamma, double tolerance = tol::state);

/// Real skew-symmetric matrix of Majorana second moments. Validated on
/// construction; immutable afterwards.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Mat gamma, double tolerance = tol::state);

  /// Skips the physicality check (still requires skew-symmetry). Used for
  /// difference matrices like delta(t), which are skew but not states.
  static CovarianceMatrix unchecked(Mat gamma);

  const Mat& matrix() const { return gamma_; }
  int dim() const { return static_cast<int>(gamma_.rows()); }
  int n_dirac() const { return dim() / 2; }
  bool is_pure(double tolerance = 1e-9) const;

 private:
  CovarianceMatrix() = default;
  Mat gamma_;
};

/// Real skew-symmetric single-particle Hamiltonian matrix.
class QuadraticHamiltonian {
 public:
  explicit QuadraticHamiltonian(Mat h, double tolerance = tol::skew);

  const Mat& matrix() const { return h_; }
  int dim() const { return static_cast<int>(h_.rows()); }

 private:
  Mat h_;
};

CovarianceMatrix direct_sum(const CovarianceMatrix& a, const CovarianceMatrix& b);
QuadraticHamiltonian direct_sum(const QuadraticHamiltonian& a, const QuadraticHamiltonian& b);
Mat direct_sum(const Mat& a, const Mat& b);

/// Ordered index sets splitting a joint matrix into system and bath rows.
/// The sets must be disjoint and jointly cover all indices.
struct Partition {
  std::vector<int> sys_indices;
  std::vector<int> bath_indices;

  Partition(std::vector<int> sys, std::vector<int> bath, int joint_dim);

  /// Convenience: system first, [0, sys_dim) vs [sys_dim, joint_dim).
  static Partition leading(int sys_dim, int joint_dim);

  int joint_dim() const { return static_cast<int>(sys_indices.size() + bath_indices.size()); }
};

/// Joint matrix plus its partition. Works for covariance and Hamiltonian
/// matrices alike; only the block bookkeeping lives here.
struct PartitionedSystem {
  Mat joint;
  Partition partition;

  PartitionedSystem(Mat joint_matrix, Partition p);

  Mat system_block() const;
  Mat bath_block() const;
  Mat correlation_block() const;  // bath rows x system columns
};

/// The {...}_B reduction: sub-matrix on the system indices.
Mat reduce_to_system(const Mat& joint, const std::vector<int>& sys_indices);
CovarianceMatrix reduce_to_system(const PartitionedSystem& p);

/// Assembles a joint matrix from blocks: system block S, bath block B and the
/// system-bath coupling C (bath rows x system columns), with -C^T opposite.
Mat assemble_joint(const Mat& s, const Mat& b, const Mat& c);

/// Canonical form of a real skew-symmetric matrix: M = O (⊕_j e_j A) O^T with
/// A = [[0,1],[-1,0]], e_j >= 0 sorted descending, near-zero blocks last.
struct NormalForm {
  Mat o;                            // orthogonal
  std::vector<double> epsilons;     // one per 2x2 block
  std::vector<int> kernel_blocks;   // block indices with e_j < tol_zero

  Mat reconstruct() const;
  Mat block_diagonal() const;       // ⊕_j e_j A

  /// Majorana indices covered by the kernel blocks (the degeneracy set G).
  std::vector<int> kernel_indices() const;
};

NormalForm skew_normal_form(const Mat& m, double tol_zero_relative = tol::zero_rel);

/// Gibbs covariance of a quadratic Hamiltonian. Blockwise -tanh(beta e_j / 2)
/// on the normal form of H; beta = 0 gives the zero matrix, beta = +inf the
/// pure ground state. The sign matches the exact Gibbs state e^{-beta H}
/// under the operator conventions fixed in oracle.hpp.
CovarianceMatrix thermal_covariance(const QuadraticHamiltonian& h, double beta);

}  // namespace fermidec
