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

#include <functional>
#include <vector>

#include "fermidec/types.hpp"

namespace fermidec {

/// X = -H - P with H skew-symmetric and P symmetric; exact decomposition.
struct GeneratorSplit {
  Mat h;  // -(X - X^T)/2
  Mat p;  // -(X + X^T)/2
};

GeneratorSplit split_generator(const Mat& x);

/// ||e^{Xt}|| <= ||e^{(X+X^T)t/2}|| at each sample.
struct BhatiaReport {
  std::vector<double> times;
  std::vector<double> lhs;   // ||e^{Xt}||
  std::vector<double> rhs;   // ||e^{(X+X^T)t/2}||
  double worst_violation = 0.0;
};

BhatiaReport bhatia_bound_check(const Mat& x, const std::vector<double>& times);

/// Decoherence rate of a ground block and the exponential envelope it implies.
struct RateReport {
  double lambda_p = 0.0;    // min eigenvalue of P
  double lambda_pg = 0.0;   // min eigenvalue of P_G
  double gap = 0.0;         // smallest nonzero |w_j| of the system, if known
  std::vector<double> times;
  std::vector<double> delta_norms;   // ||e^{X_G t} delta e^{X_G^T t}||
  std::vector<double> bound_curve;   // 2 e^{-2 lambda_PG t}
};

RateReport decoherence_bound(const Mat& x_g, const Mat& gamma_psi_g, const Mat& gamma_phi_g,
                             const std::vector<double>& times);

/// Quadratic-form probe of the positive-type property of a matrix-valued
/// correlation function sampled on a uniform grid s in [-s_max, s_max].
/// f(-s) is obtained from f*(-s) = f^T(s); argument differences are mapped to
/// the grid by nearest neighbor.
struct PositiveTypeReport {
  double min_real_part = 0.0;
  double max_imag_part = 0.0;
  bool positive = false;
};

PositiveTypeReport positive_type_check(const std::vector<CMat>& samples_nonneg_s, double ds,
                                       int n_trials, unsigned seed = 0);

/// Pr <= 1/2 + ||delta||/2, clipped to [1/2, 1].
double distinguishability_bound(double delta_norm);
/// Trace-norm route: Pr <= 1/2 + e^{-2 lambda_PG t}, clipped to [1/2, 1].
double distinguishability_bound(double lambda_pg, double t);

}  // namespace fermidec
