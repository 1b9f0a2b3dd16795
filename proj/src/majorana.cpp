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

#include "fermidec/majorana.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace fermidec {

double operator_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

double operator_norm(const CMat& m) {
  if (m.size() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

double skew_defect(const Mat& m) {
  return (m + m.transpose()).cwiseAbs().maxCoeff();
}

void require_square(const Mat& m, const char* what) {
  if (m.rows() != m.cols())
    throw StructuralError(std::string(what) + ": matrix is not square");
}

void require_even_square(const Mat& m, const char* what) {
  require_square(m, what);
  if (m.rows() % 2 != 0)
    throw StructuralError(std::string(what) + ": dimension must be even");
}

void require_skew(const Mat& m, const char* what, double tolerance) {
  require_square(m, what);
  if (m.size() > 0 && skew_defect(m) > tolerance)
    throw StructuralError(std::string(what) + ": matrix is not skew-symmetric");
}

ValidationReport validate_covariance(const Mat& gamma, double tolerance) {
  require_even_square(gamma, "validate_covariance");
  ValidationReport r;
  r.skew_defect = skew_defect(gamma);
  const Vec sv = gamma.jacobiSvd().singularValues();
  r.spectral_excess = std::max(0.0, sv.size() > 0 ? sv(0) - 1.0 : 0.0);
  const Mat ggt = gamma * gamma.transpose();
  r.purity_defect = (ggt - Mat::Identity(gamma.rows(), gamma.cols())).norm();
  r.valid = r.skew_defect <= tol::skew * 10 + tolerance && r.spectral_excess <= tolerance;
  r.pure = r.valid && r.purity_defect <= 1e-9 * std::max(1.0, double(gamma.rows()));
  return r;
}

CovarianceMatrix::CovarianceMatrix(Mat gamma, double tolerance) {
  const auto report = validate_covariance(gamma, tolerance);
  if (report.skew_defect > tol::skew * 10 + tolerance)
    throw StructuralError("CovarianceMatrix: input is not skew-symmetric");
  if (report.spectral_excess > tolerance)
    throw PhysicsError("CovarianceMatrix: singular value exceeds the physicality bound 1");
  gamma_ = std::move(gamma);
}

CovarianceMatrix CovarianceMatrix::unchecked(Mat gamma) {
  require_skew(gamma, "CovarianceMatrix::unchecked", 1e-9);
  CovarianceMatrix c;
  c.gamma_ = std::move(gamma);
  return c;
}

bool CovarianceMatrix::is_pure(double tolerance) const {
  const Mat ggt = gamma_ * gamma_.transpose();
  return (ggt - Mat::Identity(dim(), dim())).norm() <= tolerance * std::max(1, dim());
}

QuadraticHamiltonian::QuadraticHamiltonian(Mat h, double tolerance) {
  require_even_square(h, "QuadraticHamiltonian");
  require_skew(h, "QuadraticHamiltonian", std::max(tolerance, tolerance * h.cwiseAbs().maxCoeff()));
  h_ = std::move(h);
}

Mat direct_sum(const Mat& a, const Mat& b) {
  Mat out = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

CovarianceMatrix direct_sum(const CovarianceMatrix& a, const CovarianceMatrix& b) {
  return CovarianceMatrix(direct_sum(a.matrix(), b.matrix()));
}

QuadraticHamiltonian direct_sum(const QuadraticHamiltonian& a, const QuadraticHamiltonian& b) {
  return QuadraticHamiltonian(direct_sum(a.matrix(), b.matrix()));
}

Partition::Partition(std::vector<int> sys, std::vector<int> bath, int joint_dim)
    : sys_indices(std::move(sys)), bath_indices(std::move(bath)) {
  std::set<int> seen;
  for (int i : sys_indices) {
    if (i < 0 || i >= joint_dim) throw StructuralError("Partition: system index out of range");
    if (!seen.insert(i).second) throw StructuralError("Partition: duplicate index");
  }
  for (int i : bath_indices) {
    if (i < 0 || i >= joint_dim) throw StructuralError("Partition: bath index out of range");
    if (!seen.insert(i).second) throw StructuralError("Partition: index in both system and bath");
  }
  if (static_cast<int>(seen.size()) != joint_dim)
    throw StructuralError("Partition: indices do not cover the joint matrix");
}

Partition Partition::leading(int sys_dim, int joint_dim) {
  std::vector<int> sys(sys_dim), bath(joint_dim - sys_dim);
  std::iota(sys.begin(), sys.end(), 0);
  std::iota(bath.begin(), bath.end(), sys_dim);
  return Partition(std::move(sys), std::move(bath), joint_dim);
}

PartitionedSystem::PartitionedSystem(Mat joint_matrix, Partition p)
    : joint(std::move(joint_matrix)), partition(std::move(p)) {
  require_square(joint, "PartitionedSystem");
  if (partition.joint_dim() != joint.rows())
    throw StructuralError("PartitionedSystem: partition does not match matrix dimension");
}

Mat reduce_to_system(const Mat& joint, const std::vector<int>& sys_indices) {
  const int n = static_cast<int>(sys_indices.size());
  Mat out(n, n);
  for (int r = 0; r < n; ++r) {
    if (sys_indices[r] < 0 || sys_indices[r] >= joint.rows())
      throw StructuralError("reduce_to_system: index out of range");
    for (int c = 0; c < n; ++c) out(r, c) = joint(sys_indices[r], sys_indices[c]);
  }
  return out;
}

CovarianceMatrix reduce_to_system(const PartitionedSystem& p) {
  return CovarianceMatrix::unchecked(reduce_to_system(p.joint, p.partition.sys_indices));
}

Mat PartitionedSystem::system_block() const {
  return reduce_to_system(joint, partition.sys_indices);
}

Mat PartitionedSystem::bath_block() const {
  return reduce_to_system(joint, partition.bath_indices);
}

Mat PartitionedSystem::correlation_block() const {
  const auto& b = partition.bath_indices;
  const auto& s = partition.sys_indices;
  Mat out(b.size(), s.size());
  for (size_t r = 0; r < b.size(); ++r)
    for (size_t c = 0; c < s.size(); ++c) out(r, c) = joint(b[r], s[c]);
  return out;
}

Mat assemble_joint(const Mat& s, const Mat& b, const Mat& c) {
  if (c.rows() != b.rows() || c.cols() != s.cols())
    throw StructuralError("assemble_joint: coupling block has wrong shape");
  const int ns = static_cast<int>(s.rows());
  const int nb = static_cast<int>(b.rows());
  Mat out(ns + nb, ns + nb);
  out.topLeftCorner(ns, ns) = s;
  out.bottomRightCorner(nb, nb) = b;
  out.bottomLeftCorner(nb, ns) = c;
  out.topRightCorner(ns, nb) = -c.transpose();
  return out;
}

Mat NormalForm::block_diagonal() const {
  const int n = static_cast<int>(epsilons.size());
  Mat d = Mat::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    d(2 * j, 2 * j + 1) = epsilons[j];
    d(2 * j + 1, 2 * j) = -epsilons[j];
  }
  return d;
}

Mat NormalForm::reconstruct() const { return o * block_diagonal() * o.transpose(); }

std::vector<int> NormalForm::kernel_indices() const {
  std::vector<int> out;
  for (int b : kernel_blocks) {
    out.push_back(2 * b);
    out.push_back(2 * b + 1);
  }
  return out;
}

NormalForm skew_normal_form(const Mat& m, double tol_zero_relative) {
  require_even_square(m, "skew_normal_form");
  require_skew(m, "skew_normal_form", std::max(tol::skew, tol::skew * m.cwiseAbs().maxCoeff()));
  const int dim = static_cast<int>(m.rows());

  // Real Schur of a skew-symmetric matrix is block diagonal: 2x2 rotation
  // generators for nonzero eigenvalue pairs, 1x1 zeros for kernel directions.
  Eigen::RealSchur<Mat> schur(0.5 * (m - m.transpose()));
  Mat t = schur.matrixT();
  Mat u = schur.matrixU();

  struct Block {
    double eps;
    int col;   // first of the two columns of u
    bool paired;
  };
  std::vector<Block> blocks;
  std::vector<int> singles;
  int i = 0;
  while (i < dim) {
    if (i + 1 < dim && std::abs(t(i + 1, i)) > 0.0) {
      blocks.push_back({t(i, i + 1), i, true});
      i += 2;
    } else {
      singles.push_back(i);
      i += 1;
    }
  }
  // Zero eigenvalues of a skew matrix come in even multiplicity; pair the
  // leftover 1x1 blocks into zero blocks.
  for (size_t s = 0; s + 1 < singles.size(); s += 2)
    blocks.push_back({0.0, -1 - static_cast<int>(s), false});

  const double scale = m.cwiseAbs().maxCoeff();
  const double tol_zero = tol_zero_relative * std::max(scale, 1e-300);

  // Orient each block so the canonical coefficient is nonnegative, then sort
  // descending with zeros last.
  NormalForm nf;
  nf.o = Mat::Zero(dim, dim);
  std::vector<std::pair<double, Block>> order;
  order.reserve(blocks.size());
  for (auto& b : blocks) order.push_back({std::abs(b.eps), b});
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  int out_block = 0;
  for (auto& [aeps, b] : order) {
    Eigen::VectorXd col0, col1;
    if (b.paired) {
      col0 = u.col(b.col);
      col1 = u.col(b.col + 1);
      if (b.eps < 0.0) std::swap(col0, col1);
    } else {
      const int s = -1 - b.col;
      col0 = u.col(singles[s]);
      col1 = u.col(singles[s + 1]);
    }
    nf.o.col(2 * out_block) = col0;
    nf.o.col(2 * out_block + 1) = col1;
    nf.epsilons.push_back(aeps);
    if (aeps < tol_zero) nf.kernel_blocks.push_back(out_block);
    ++out_block;
  }
  return nf;
}

CovarianceMatrix thermal_covariance(const QuadraticHamiltonian& h, double beta) {
  if (beta < 0.0 || std::isnan(beta))
    throw PhysicsError("thermal_covariance: beta must be nonnegative");
  const NormalForm nf = skew_normal_form(h.matrix());
  const int n = static_cast<int>(nf.epsilons.size());
  Mat d = Mat::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    // Gibbs occupation of the mode pair. The ground state of a block +e A has
    // covariance -A under the Fock realization used by the exact oracle.
    // Kernel blocks stay maximally mixed at every temperature.
    const bool kernel =
        std::find(nf.kernel_blocks.begin(), nf.kernel_blocks.end(), j) != nf.kernel_blocks.end();
    const double x = beta * nf.epsilons[j] / 2.0;
    const double coeff = kernel ? 0.0 : (std::isinf(beta) ? -1.0 : -std::tanh(x));
    d(2 * j, 2 * j + 1) = coeff;
    d(2 * j + 1, 2 * j) = -coeff;
  }
  Mat gamma = nf.o * d * nf.o.transpose();
  gamma = 0.5 * (gamma - gamma.transpose());  // strip rounding noise
  return CovarianceMatrix(std::move(gamma));
}

}  // namespace fermidec
