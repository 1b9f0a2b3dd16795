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

#include "fermidec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "fermidec/dynamics.hpp"
#include "fermidec/majorana.hpp"

namespace fermidec {

GeneratorSplit split_generator(const Mat& x) {
  require_square(x, "split_generator");
  GeneratorSplit s;
  s.h = -0.5 * (x - x.transpose());
  s.p = -0.5 * (x + x.transpose());
  return s;
}

BhatiaReport bhatia_bound_check(const Mat& x, const std::vector<double>& times) {
  require_square(x, "bhatia_bound_check");
  const Mat sym = 0.5 * (x + x.transpose());
  BhatiaReport r;
  for (double t : times) {
    const double lhs = operator_norm(expm(x, t));
    const double rhs = operator_norm(expm(sym, t));
    r.times.push_back(t);
    r.lhs.push_back(lhs);
    r.rhs.push_back(rhs);
    r.worst_violation = std::max(r.worst_violation, lhs - rhs);
  }
  return r;
}

static double min_sym_eigenvalue(const Mat& p) {
  if (p.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (p + p.transpose()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

RateReport decoherence_bound(const Mat& x_g, const Mat& gamma_psi_g, const Mat& gamma_phi_g,
                             const std::vector<double>& times) {
  require_square(x_g, "decoherence_bound");
  RateReport r;
  r.lambda_pg = min_sym_eigenvalue(split_generator(x_g).p);
  r.lambda_p = r.lambda_pg;
  if (r.lambda_pg < -1e-9)
    throw PhysicsError("decoherence_bound: dissipative part has a negative eigenvalue");
  const Mat delta0 = gamma_psi_g - gamma_phi_g;
  for (double t : times) {
    const Mat e = expm(x_g, t);
    r.times.push_back(t);
    r.delta_norms.push_back(operator_norm(Mat(e * delta0 * e.transpose())));
    r.bound_curve.push_back(2.0 * std::exp(-2.0 * r.lambda_pg * t));
  }
  return r;
}

PositiveTypeReport positive_type_check(const std::vector<CMat>& samples_nonneg_s, double ds,
                                       int n_trials, unsigned seed) {
  if (samples_nonneg_s.empty() || ds <= 0.0)
    throw StructuralError("positive_type_check: empty sample grid");
  const int n_s = static_cast<int>(samples_nonneg_s.size());
  const int dim = static_cast<int>(samples_nonneg_s[0].rows());

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, n_s - 1);
  std::normal_distribution<double> gauss(0.0, 1.0);

  PositiveTypeReport report;
  report.min_real_part = std::numeric_limits<double>::infinity();
  report.max_imag_part = 0.0;

  for (int trial = 0; trial < n_trials; ++trial) {
    // Random grid points s_n and complex weights; the quadratic form
    // sum_nm w_n* w_m u^+ f(s_n - s_m) u should be real and nonnegative.
    const int n_pts = 4 + trial % 5;
    std::vector<int> pts(n_pts);
    std::vector<Complex> w(n_pts);
    for (int i = 0; i < n_pts; ++i) {
      pts[i] = pick(rng);
      w[i] = Complex(gauss(rng), gauss(rng));
    }
    CVec u(dim);
    for (int i = 0; i < dim; ++i) u(i) = Complex(gauss(rng), gauss(rng));
    u.normalize();

    Complex form(0.0, 0.0);
    for (int a = 0; a < n_pts; ++a) {
      for (int b = 0; b < n_pts; ++b) {
        // f(-s) = f(s)^H, from the conjugate relation f*_{jk}(-s) = f_{kj}(s).
        const int diff = pts[a] - pts[b];
        CMat f = diff >= 0 ? samples_nonneg_s[std::min(diff, n_s - 1)]
                           : CMat(samples_nonneg_s[std::min(-diff, n_s - 1)].adjoint());
        form += std::conj(w[a]) * w[b] * (u.adjoint() * f * u)(0, 0);
      }
    }
    report.min_real_part = std::min(report.min_real_part, form.real());
    report.max_imag_part = std::max(report.max_imag_part, std::abs(form.imag()));
  }
  report.positive = report.min_real_part >= -1e-9 && report.max_imag_part <= 1e-9;
  return report;
}

double distinguishability_bound(double delta_norm) {
  if (delta_norm < 0.0) throw StructuralError("distinguishability_bound: negative norm");
  return std::clamp(0.5 + delta_norm / 2.0, 0.5, 1.0);
}

double distinguishability_bound(double lambda_pg, double t) {
  return std::clamp(0.5 + std::exp(-2.0 * lambda_pg * t), 0.5, 1.0);
}

}  // namespace fermidec
