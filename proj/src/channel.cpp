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

#include "fermidec/channel.hpp"

#include <sstream>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "fermidec/dynamics.hpp"

namespace fermidec {

void LindbladSpec::validate() const {
  for (const auto& l : ls) {
    if (l.size() != dim()) throw StructuralError("LindbladSpec: coefficient vectors differ in length");
    if (l.size() % 2 != 0) throw StructuralError("LindbladSpec: dimension must be even");
  }
}

CMat build_m(const LindbladSpec& spec) {
  spec.validate();
  if (spec.empty()) throw StructuralError("build_m: empty spec");
  const int d = spec.dim();
  CMat m = CMat::Zero(d, d);
  for (const auto& l : spec.ls) m += l.conjugate() * l.transpose();
  return m;
}

GaussianChannel build_channel(const QuadraticHamiltonian& h, const LindbladSpec& spec,
                              Convention convention) {
  GaussianChannel ch;
  ch.convention = convention;
  const int d = h.dim();
  const double h_sign = convention == Convention::calibrated ? 1.0 : -1.0;
  const double diss = convention == Convention::calibrated ? 4.0 : 2.0;
  if (spec.empty()) {
    ch.x = h_sign * h.matrix();
    ch.y = Mat::Zero(d, d);
    return ch;
  }
  if (spec.dim() != d) throw StructuralError("build_channel: Lindblad/Hamiltonian dimension mismatch");
  const CMat m = build_m(spec);
  const Mat re_m = m.real();                 // symmetric since M is Hermitian
  const Mat im_m = m.imag();                 // antisymmetric
  ch.x = h_sign * h.matrix() - diss * re_m;
  ch.y = -2.0 * diss * im_m;
  return ch;
}

Mat solve_lyapunov(const Mat& a, const Mat& q) {
  require_square(a, "solve_lyapunov");
  if (q.rows() != a.rows() || q.cols() != a.cols())
    throw StructuralError("solve_lyapunov: dimension mismatch");
  const int n = static_cast<int>(a.rows());

  // Bartels-Stewart on the complex Schur form: with A = U T U*, the equation
  // A P + P A^T + Q = 0 becomes T G + G T* = -U* Q U, solved column by column
  // (T upper triangular, A real so A^T = A*).
  Eigen::ComplexSchur<Mat> schur(a);
  const CMat t = schur.matrixT();
  const CMat u = schur.matrixU();
  const CMat c = -u.adjoint() * q * u;

  // (G T*)_{:,k} couples column k to columns j >= k of G, so sweep backwards.
  CMat g = CMat::Zero(n, n);
  for (int k = n - 1; k >= 0; --k) {
    CVec rhs = c.col(k);
    for (int j = k + 1; j < n; ++j) rhs -= std::conj(t(k, j)) * g.col(j);
    CMat lhs = t;
    lhs.diagonal().array() += std::conj(t(k, k));
    g.col(k) = lhs.triangularView<Eigen::Upper>().solve(rhs);
  }
  const CMat p = u * g * u.adjoint();
  return p.real();
}

static void require_hurwitz(const Mat& x) {
  const double margin = tol::stab_rel * std::max(1.0, operator_norm(x));
  const Eigen::VectorXcd ev = Eigen::EigenSolver<Mat>(x, false).eigenvalues();
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i).real() >= -margin) {
      std::ostringstream msg;
      msg << "steady_state: X is not Hurwitz-stable, eigenvalue " << ev(i).real();
      if (ev(i).imag() != 0.0) msg << (ev(i).imag() > 0 ? "+" : "") << ev(i).imag() << "i";
      msg << " has real part >= " << -margin;
      throw PhysicsError(msg.str());
    }
  }
}

CovarianceMatrix steady_state(const GaussianChannel& ch) {
  require_hurwitz(ch.x);
  Mat g = solve_lyapunov(ch.x, ch.y);
  g = 0.5 * (g - g.transpose());
  return CovarianceMatrix(std::move(g));
}

CovarianceMatrix propagate(const GaussianChannel& ch, const CovarianceMatrix& gamma0, double t,
                           const CovarianceMatrix& gamma_ss) {
  if (gamma0.dim() != ch.dim()) throw StructuralError("propagate: dimension mismatch");
  const Mat e = expm(ch.x, t);
  Mat g = e * (gamma0.matrix() - gamma_ss.matrix()) * e.transpose() + gamma_ss.matrix();
  g = 0.5 * (g - g.transpose());
  return CovarianceMatrix::unchecked(std::move(g));
}

CovarianceMatrix propagate(const GaussianChannel& ch, const CovarianceMatrix& gamma0, double t) {
  return propagate(ch, gamma0, t, steady_state(ch));
}

}  // namespace fermidec
