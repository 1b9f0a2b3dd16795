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

#include "fermidec/oracle.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace fermidec::oracle {

namespace {
const Complex kI(0.0, 1.0);
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

FockOperatorSet::FockOperatorSet(int n_dirac) : n_(n_dirac) {
  if (n_ < 1 || n_ > kMaxDiracModes)
    throw StructuralError("FockOperatorSet: mode count outside [1, 6]");

  CMat sm(2, 2), sz(2, 2), id2 = CMat::Identity(2, 2);
  sm << 0, 1, 0, 0;   // annihilator on one mode: |0><1|
  sz << 1, 0, 0, -1;  // parity string factor

  for (int k = 0; k < n_; ++k) {
    CMat op = CMat::Identity(1, 1);
    for (int site = 0; site < n_; ++site) {
      if (site < k) op = kron(op, sz);
      else if (site == k) op = kron(op, sm);
      else op = kron(op, id2);
    }
    a_.push_back(op);
  }
  for (int k = 0; k < n_; ++k) {
    c_.push_back(a_[k] + a_[k].adjoint());
    c_.push_back(kI * (a_[k] - a_[k].adjoint()));
  }

  const int d = hilbert_dim();
  for (int j = 0; j < 2 * n_; ++j) {
    if ((c_[j] - c_[j].adjoint()).cwiseAbs().maxCoeff() > 1e-12)
      throw StructuralError("FockOperatorSet: Majorana operator not self-adjoint");
    for (int k = j; k < 2 * n_; ++k) {
      const CMat anti = c_[j] * c_[k] + c_[k] * c_[j];
      const CMat expect = (j == k ? 2.0 : 0.0) * CMat::Identity(d, d);
      if ((anti - expect).cwiseAbs().maxCoeff() > 1e-12)
        throw StructuralError("FockOperatorSet: anticommutation relation violated");
    }
  }
}

CMat FockOperatorSet::realize_hamiltonian(const QuadraticHamiltonian& h) const {
  if (h.dim() != 2 * n_) throw StructuralError("realize_hamiltonian: dimension mismatch");
  const int d = hilbert_dim();
  CMat out = CMat::Zero(d, d);
  const Mat& m = h.matrix();
  for (int j = 0; j < 2 * n_; ++j)
    for (int k = 0; k < 2 * n_; ++k)
      if (m(j, k) != 0.0) out += (kI / 4.0) * m(j, k) * (c_[j] * c_[k]);
  return out;
}

CMat FockOperatorSet::realize_lindblad(const CVec& l) const {
  if (l.size() != 2 * n_) throw StructuralError("realize_lindblad: dimension mismatch");
  const int d = hilbert_dim();
  CMat out = CMat::Zero(d, d);
  for (int j = 0; j < 2 * n_; ++j)
    if (l(j) != 0.0) out += l(j) * c_[j];
  return out;
}

DensityMatrix::DensityMatrix(CMat rho, double tolerance) {
  if (rho.rows() != rho.cols()) throw StructuralError("DensityMatrix: not square");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tolerance)
    throw StructuralError("DensityMatrix: not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > tolerance)
    throw StructuralError("DensityMatrix: trace differs from 1");
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (rho + rho.adjoint()),
                                         Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw StructuralError("DensityMatrix: negative eigenvalue");
  rho_ = std::move(rho);
}

DensityMatrix DensityMatrix::pure(const CVec& psi) {
  const double n = psi.norm();
  if (n == 0.0) throw StructuralError("DensityMatrix::pure: zero vector");
  const CVec v = psi / n;
  return DensityMatrix(v * v.adjoint());
}

CovarianceMatrix covariance_of(const DensityMatrix& rho, const FockOperatorSet& ops) {
  const int dim = 2 * ops.n_dirac();
  Mat gamma = Mat::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      const Complex v =
          (kI / 2.0) * ((ops.c(j) * ops.c(k) - ops.c(k) * ops.c(j)) * rho.matrix()).trace();
      if (std::abs(v.imag()) > 1e-10)
        throw StructuralError("covariance_of: imaginary residue exceeds tolerance");
      gamma(j, k) = v.real();
      gamma(k, j) = -v.real();
    }
  }
  return CovarianceMatrix::unchecked(std::move(gamma));
}

DensityMatrix lindblad_evolve(const DensityMatrix& rho0, const QuadraticHamiltonian& h,
                              const LindbladSpec& spec, double t, const FockOperatorSet& ops) {
  const int d = ops.hilbert_dim();
  if (rho0.dim() != d) throw StructuralError("lindblad_evolve: state dimension mismatch");

  const CMat hh = ops.realize_hamiltonian(h);
  const CMat id = CMat::Identity(d, d);

  // Column-major vectorization: vec(A X B) = (B^T (x) A) vec(X).
  CMat liou = -kI * (kron(id, hh) - kron(hh.transpose(), id));
  for (const auto& l : spec.ls) {
    const CMat lm = ops.realize_lindblad(l);
    const CMat ldl = lm.adjoint() * lm;
    liou += 2.0 * kron(lm.conjugate(), lm);
    liou -= kron(id, ldl);
    liou -= kron(ldl.transpose(), id);
  }

  Eigen::ComplexEigenSolver<CMat> es(liou);
  const CMat v = es.eigenvectors();
  const CVec rho_vec = Eigen::Map<const CVec>(rho0.matrix().data(), d * d);
  const CVec coeffs = v.partialPivLu().solve(rho_vec);
  CVec evolved = CVec::Zero(d * d);
  for (int i = 0; i < d * d; ++i)
    evolved += coeffs(i) * std::exp(es.eigenvalues()(i) * t) * v.col(i);

  CMat rho_t = Eigen::Map<const CMat>(evolved.data(), d, d);
  rho_t = 0.5 * (rho_t + rho_t.adjoint());
  if (std::abs(rho_t.trace().real() - 1.0) > 1e-10)
    throw PhysicsError("lindblad_evolve: trace not preserved");
  return DensityMatrix(std::move(rho_t));
}

DensityMatrix gibbs_state(const QuadraticHamiltonian& h, double beta, const FockOperatorSet& ops) {
  if (beta < 0.0) throw PhysicsError("gibbs_state: beta must be nonnegative");
  const CMat hh = ops.realize_hamiltonian(h);
  Eigen::SelfAdjointEigenSolver<CMat> es(hh);
  const Vec e = es.eigenvalues();
  const int d = ops.hilbert_dim();

  Vec w(d);
  if (std::isinf(beta)) {
    const double e0 = e.minCoeff();
    for (int i = 0; i < d; ++i) w(i) = (e(i) - e0 < 1e-12) ? 1.0 : 0.0;
  } else {
    const double e0 = e.minCoeff();  // shift avoids overflow at large beta
    for (int i = 0; i < d; ++i) w(i) = std::exp(-beta * (e(i) - e0));
  }
  w /= w.sum();
  const CMat rho = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
  return DensityMatrix(rho);
}

double trace_norm(const CMat& a) {
  return a.jacobiSvd().singularValues().sum();
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& rho_tilde) {
  if (rho.dim() != rho_tilde.dim()) throw StructuralError("trace_distance: dimension mismatch");
  return trace_norm(rho.matrix() - rho_tilde.matrix());
}

TensorNormReport tensor_norm_identities_check(const CMat& a, const CMat& b) {
  TensorNormReport r;
  r.product_defect = std::abs(trace_norm(kron(a, b)) - trace_norm(a) * trace_norm(b));
  CMat sum = CMat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  sum.topLeftCorner(a.rows(), a.cols()) = a;
  sum.bottomRightCorner(b.rows(), b.cols()) = b;
  r.sum_defect = std::abs(trace_norm(sum) - (trace_norm(a) + trace_norm(b)));
  return r;
}

}  // namespace fermidec::oracle
