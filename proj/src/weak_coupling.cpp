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

#include "fermidec/weak_coupling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "fermidec/dynamics.hpp"

namespace fermidec {

namespace {
const Complex kI(0.0, 1.0);
}

int SystemEigenbasis::zero_class() const {
  for (size_t c = 0; c < degeneracy_classes.size(); ++c) {
    double wmax = 0.0;
    for (int j : degeneracy_classes[c]) wmax = std::max(wmax, std::abs(omegas(j)));
    if (wmax < std::max(tol_omega, 1e-300)) return static_cast<int>(c);
  }
  return -1;
}

double SystemEigenbasis::gap() const {
  double g = std::numeric_limits<double>::infinity();
  for (int j = 0; j < omegas.size(); ++j) {
    const double w = std::abs(omegas(j));
    if (w > tol_omega) g = std::min(g, w);
  }
  return g;
}

SystemEigenbasis system_eigenbasis(const QuadraticHamiltonian& h_s, double tol_omega_relative) {
  // i H_S is Hermitian; a self-adjoint solve keeps degenerate subspaces
  // orthonormal. H_S |j> = i w_j |j> with w_j = -lambda_j.
  const CMat k = kI * h_s.matrix().cast<Complex>();
  Eigen::SelfAdjointEigenSolver<CMat> es(k);

  SystemEigenbasis basis;
  basis.omegas = -es.eigenvalues();
  basis.vectors = es.eigenvectors();
  const double wmax = basis.omegas.cwiseAbs().maxCoeff();
  basis.tol_omega = tol_omega_relative * std::max(wmax, 1e-300);

  // Single-linkage clustering of sorted frequencies.
  std::vector<int> order(basis.omegas.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return basis.omegas(a) < basis.omegas(b); });
  std::vector<int> current;
  for (size_t i = 0; i < order.size(); ++i) {
    if (!current.empty() &&
        basis.omegas(order[i]) - basis.omegas(current.back()) > basis.tol_omega) {
      basis.degeneracy_classes.push_back(current);
      current.clear();
    }
    current.push_back(order[i]);
  }
  if (!current.empty()) basis.degeneracy_classes.push_back(current);
  return basis;
}

BathCorrelation::BathCorrelation(Mat coupling, Mat bath_hamiltonian, double eps)
    : h_i(std::move(coupling)), h_b(std::move(bath_hamiltonian)), epsilon(eps) {
  require_skew(h_b, "BathCorrelation bath Hamiltonian",
               std::max(tol::skew, tol::skew * h_b.cwiseAbs().maxCoeff()));
  if (h_i.rows() != h_b.rows())
    throw StructuralError("BathCorrelation: coupling rows must match bath dimension");
  if (!(epsilon > 0.0))
    throw PhysicsError("BathCorrelation: regularization epsilon must be positive");
}

double interaction_picture_check(const Mat& h_s, const Mat& h_b, const Mat& h_i, double t) {
  const int ns = static_cast<int>(h_s.rows());
  const int nb = static_cast<int>(h_b.rows());
  Mat h_int = Mat::Zero(ns + nb, ns + nb);
  h_int.bottomLeftCorner(nb, ns) = h_i;
  h_int.topRightCorner(ns, nb) = -h_i.transpose();

  const Mat u = expm(direct_sum(h_s, h_b), t);
  const Mat lhs = u * h_int * u.transpose();

  const Mat h_i_t = expm(h_b, t) * h_i * expm(h_s, -t);
  Mat rhs = Mat::Zero(ns + nb, ns + nb);
  rhs.bottomLeftCorner(nb, ns) = h_i_t;
  rhs.topRightCorner(ns, nb) = -h_i_t.transpose();
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

static CMat resolvent_apply(const BathCorrelation& bc, double omega) {
  // (H_B + (eps - i w) I)^{-1} H_I
  const int nb = static_cast<int>(bc.h_b.rows());
  CMat a = bc.h_b.cast<Complex>();
  a.diagonal().array() += Complex(bc.epsilon, -omega);
  return a.partialPivLu().solve(bc.h_i.cast<Complex>());
}

CMat half_line_fourier(const BathCorrelation& bc, double omega) {
  return bc.h_i.transpose().cast<Complex>() * resolvent_apply(bc, omega);
}

GaussianChannel derive_generator(const QuadraticHamiltonian& h_s, const BathCorrelation& bc,
                                 const CovarianceMatrix& gamma_b, double tol_omega_relative,
                                 DerivationReport* report) {
  if (bc.h_i.cols() != h_s.dim())
    throw StructuralError("derive_generator: coupling columns must match system dimension");
  if (gamma_b.dim() != bc.h_b.rows())
    throw StructuralError("derive_generator: bath state dimension mismatch");

  const Mat comm = gamma_b.matrix() * bc.h_b - bc.h_b * gamma_b.matrix();
  const double bath_scale = std::max(1.0, bc.h_b.cwiseAbs().maxCoeff());
  if (comm.cwiseAbs().maxCoeff() > 1e-8 * bath_scale)
    throw PhysicsError("derive_generator: bath state is not stationary ([Gamma_B, H_B] != 0)");

  const SystemEigenbasis basis = system_eigenbasis(h_s, tol_omega_relative);
  const int d = h_s.dim();
  const CMat& v = basis.vectors;
  const CMat gb = gamma_b.matrix().cast<Complex>();
  const CMat hit = bc.h_i.transpose().cast<Complex>();

  CMat x_eig = CMat::Zero(d, d);
  CMat y_eig = CMat::Zero(d, d);
  for (const auto& cls : basis.degeneracy_classes) {
    double w = 0.0;
    for (int j : cls) w += basis.omegas(j);
    w /= static_cast<double>(cls.size());

    const CMat rhi = resolvent_apply(bc, w);          // R(w) H_I
    const CMat g = hit * rhi;                          // H_I^T R(w) H_I
    const CMat gy = hit * gb * rhi + rhi.adjoint() * gb * bc.h_i.cast<Complex>();
    for (int j : cls) {
      for (int k : cls) {
        x_eig(j, k) = -(v.col(j).adjoint() * g * v.col(k))(0, 0);
        y_eig(j, k) = (v.col(j).adjoint() * gy * v.col(k))(0, 0);
      }
    }
  }

  const CMat x_back = v * x_eig * v.adjoint();
  const CMat y_back = v * y_eig * v.adjoint();
  const double res_x = x_back.imag().cwiseAbs().maxCoeff();
  const double res_y = y_back.imag().cwiseAbs().maxCoeff();
  const double scale = std::max(1e-300, x_back.real().cwiseAbs().maxCoeff());
  if (res_x > 1e-8 * std::max(1.0, scale))
    throw PhysicsError("derive_generator: excessive imaginary residue in X "
                       "(check tol_omega classification)");

  GaussianChannel ch;
  ch.convention = Convention::calibrated;
  ch.x = h_s.matrix() + x_back.real();
  ch.y = 0.5 * (y_back.real() - y_back.real().transpose());

  if (report) {
    report->omegas = basis.omegas;
    report->degeneracy_classes = basis.degeneracy_classes;
    report->epsilon = bc.epsilon;
    report->imag_residue_x = res_x;
    report->imag_residue_y = res_y;
    const Mat sec = ch.x * h_s.matrix() - h_s.matrix() * ch.x;
    const double denom = operator_norm(ch.x) * operator_norm(h_s.matrix());
    report->secular_defect = denom > 0.0 ? operator_norm(sec) / denom : 0.0;
  }
  return ch;
}

BlockDecomposition block_decompose(const Mat& x, const QuadraticHamiltonian& h_s,
                                   double tol_omega_relative) {
  require_square(x, "block_decompose");
  if (x.rows() != h_s.dim()) throw StructuralError("block_decompose: dimension mismatch");

  const NormalForm nf = skew_normal_form(h_s.matrix(), tol_omega_relative);
  const std::vector<int> g_idx = nf.kernel_indices();
  if (g_idx.empty())
    throw PhysicsError("block_decompose: Hamiltonian has no zero-frequency modes");

  std::vector<int> e_idx;
  for (int i = 0; i < h_s.dim(); ++i)
    if (std::find(g_idx.begin(), g_idx.end(), i) == g_idx.end()) e_idx.push_back(i);

  const int ng = static_cast<int>(g_idx.size());
  const int ne = static_cast<int>(e_idx.size());
  Mat o(h_s.dim(), h_s.dim());
  for (int i = 0; i < ng; ++i) o.col(i) = nf.o.col(g_idx[i]);
  for (int i = 0; i < ne; ++i) o.col(ng + i) = nf.o.col(e_idx[i]);

  const Mat xt = o.transpose() * x * o;
  BlockDecomposition bd;
  bd.o = o;
  bd.x_g = xt.topLeftCorner(ng, ng);
  bd.x_e = xt.bottomRightCorner(ne, ne);
  bd.leakage = std::max(ne > 0 ? xt.topRightCorner(ng, ne).cwiseAbs().maxCoeff() : 0.0,
                        ne > 0 ? xt.bottomLeftCorner(ne, ng).cwiseAbs().maxCoeff() : 0.0);
  return bd;
}

}  // namespace fermidec
