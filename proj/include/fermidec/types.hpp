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

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace fermidec {

using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

namespace tol {
inline constexpr double skew = 1e-12;
inline constexpr double state = 1e-9;
inline constexpr double orth = 1e-10;
inline constexpr double recon = 1e-10;
inline constexpr double zero_rel = 1e-10;    // kernel threshold, relative to ||H||
inline constexpr double stab_rel = 1e-12;    // Hurwitz margin, relative to ||X||
inline constexpr double omega_rel = 1e-8;    // degeneracy clustering, relative to max|w|
}  // namespace tol

/// Thrown when a matrix fails a structural precondition (shape, symmetry,
/// index bounds).
struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when inputs are structurally fine but physically inadmissible
/// (unstable generator, nonstationary bath, out-of-range parameter).
struct PhysicsError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Largest singular value.
double operator_norm(const Mat& m);
double operator_norm(const CMat& m);

/// Accepts unevaluated Eigen expressions without overload ambiguity.
template <typename Derived>
double operator_norm(const Eigen::MatrixBase<Derived>& m) {
  if constexpr (Eigen::NumTraits<typename Derived::Scalar>::IsComplex)
    return operator_norm(CMat(m));
  else
    return operator_norm(Mat(m));
}

/// ||m + m^T||_inf, zero for exactly skew-symmetric input.
double skew_defect(const Mat& m);

void require_square(const Mat& m, const char* what);
void require_even_square(const Mat& m, const char* what);
void require_skew(const Mat& m, const char* what, double tolerance = tol::skew);

}  // namespace fermidec
