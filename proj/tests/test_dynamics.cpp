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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "fermidec/dynamics.hpp"
#include "fermidec/models.hpp"

using namespace fermidec;

namespace {

Mat block_a() {
  Mat a(2, 2);
  a << 0, 1, -1, 0;
  return a;
}

Mat random_skew(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m = Mat::Zero(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = r + 1; c < dim; ++c) {
      m(r, c) = g(rng);
      m(c, r) = -m(r, c);
    }
  return m;
}

Mat random_dense(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = g(rng);
  return m;
}

/// Independent eigendecomposition-based exponential.
Mat expm_eigen(const Mat& m, double t) {
  const Eigen::ComplexEigenSolver<CMat> es(m.cast<Complex>() * t);
  const CMat d = es.eigenvalues().array().exp().matrix().asDiagonal();
  const CMat r = es.eigenvectors() * d * es.eigenvectors().inverse();
  return r.real();
}

}  // namespace

TEST_CASE("expm identity and rotation") {
  CHECK((expm(Mat::Zero(4, 4), 1.3) - Mat::Identity(4, 4)).norm() < 1e-15);

  const double omega = 0.8, t = 1.9;
  const Mat r = expm(omega * block_a(), t);
  Mat expect(2, 2);
  expect << std::cos(omega * t), std::sin(omega * t), -std::sin(omega * t), std::cos(omega * t);
  CHECK((r - expect).norm() < 1e-13);
}

TEST_CASE("expm matches eigen-based oracle on random input") {
  const Mat m = random_dense(6, 21);
  CHECK((expm(m, 0.7) - expm_eigen(m, 0.7)).norm() < 1e-11);
}

TEST_CASE("expm of skew matrix is orthogonal") {
  const Mat m = random_skew(10, 22);
  const Mat u = expm(m, 2.0);
  CHECK(operator_norm(u.transpose() * u - Mat::Identity(10, 10)) < 1e-12);
}

TEST_CASE("expm rejects non-finite input") {
  Mat bad = Mat::Zero(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(expm(bad, 1.0), StructuralError);
}

TEST_CASE("evolve_closed special cases") {
  const CovarianceMatrix g0(direct_sum(block_a(), Mat::Zero(2, 2)));
  const QuadraticHamiltonian h0(Mat::Zero(4, 4));
  CHECK((evolve_closed(g0, h0, 3.0).matrix() - g0.matrix()).norm() == 0.0);

  // commuting pair: gamma proportional to h blockwise
  const QuadraticHamiltonian h(2.0 * block_a());
  const CovarianceMatrix g(block_a());
  CHECK((evolve_closed(g, h, 1.7).matrix() - g.matrix()).norm() < 1e-13);
}

TEST_CASE("evolve_closed preserves singular values") {
  const QuadraticHamiltonian h(random_skew(6, 31));
  const CovarianceMatrix g0 = thermal_covariance(h, 0.9);
  const CovarianceMatrix g1 = evolve_closed(g0, QuadraticHamiltonian(random_skew(6, 32)), 2.3);
  const Vec s0 = Eigen::JacobiSVD<Mat>(g0.matrix()).singularValues();
  const Vec s1 = Eigen::JacobiSVD<Mat>(g1.matrix()).singularValues();
  CHECK((s0 - s1).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("joint_evolve_and_reduce decoupled blocks") {
  const Mat hs = random_skew(4, 41);
  const Mat hb = random_skew(6, 42);
  const QuadraticHamiltonian h_joint(direct_sum(hs, hb));
  const CovarianceMatrix gs = thermal_covariance(QuadraticHamiltonian(hs), 1.0);
  const CovarianceMatrix gb = thermal_covariance(QuadraticHamiltonian(hb), 1.0);
  const PartitionedSystem p(direct_sum(gs, gb).matrix(), Partition::leading(4, 10));
  const CovarianceMatrix red = joint_evolve_and_reduce(p, h_joint, 1.1);
  const CovarianceMatrix direct = evolve_closed(gs, QuadraticHamiltonian(hs), 1.1);
  CHECK((red.matrix() - direct.matrix()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("joint evolution is linear in the initial state") {
  const Mat h = random_skew(8, 51);
  const QuadraticHamiltonian hj(h);
  const Mat gs = random_skew(4, 52) * 0.1;
  const Mat gb = random_skew(4, 53) * 0.1;
  const Partition part = Partition::leading(4, 8);

  const PartitionedSystem full(direct_sum(gs, gb), part);
  const PartitionedSystem only_s(direct_sum(gs, Mat::Zero(4, 4)), part);
  const PartitionedSystem only_b(direct_sum(Mat::Zero(4, 4), gb), part);
  const Mat split = joint_evolve_and_reduce(only_s, hj, 0.9).matrix() +
                    joint_evolve_and_reduce(only_b, hj, 0.9).matrix();
  CHECK((joint_evolve_and_reduce(full, hj, 0.9).matrix() - split).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("propagator_slice basics") {
  const QuadraticHamiltonian hj(random_skew(8, 61));
  const std::vector<int> sys = {0, 1, 2, 3};
  const PropagatorSlice at0 = propagator_slice(hj, sys, 0.0);
  CHECK((at0.d - Mat::Identity(4, 4)).norm() == 0.0);
  CHECK(at0.norm == doctest::Approx(1.0));

  // sub-block of an orthogonal matrix
  const PropagatorSlice s = propagator_slice(hj, sys, 2.7);
  CHECK(s.norm <= 1.0 + 1e-12);

  // decoupled joint: norm stays exactly 1
  const QuadraticHamiltonian dec(direct_sum(random_skew(4, 62), random_skew(4, 63)));
  CHECK(propagator_slice(dec, sys, 3.0).norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("coupled propagator norm decays before the revival") {
  // one system mode attached to a 40-mode chain
  const QuadraticHamiltonian hb = models::bath_lattice({1, 40, 1.0, models::Boundary::open});
  const Mat hi = models::endpoint_coupling(2, hb.dim(), 0.6, 0);
  const QuadraticHamiltonian hj(assemble_joint(Mat::Zero(2, 2), hb.matrix(), hi));
  const std::vector<int> sys = {0, 1};
  const double n1 = propagator_slice(hj, sys, 2.0).norm;
  const double n2 = propagator_slice(hj, sys, 6.0).norm;
  CHECK(n1 < 1.0);
  CHECK(n2 < n1);
}

TEST_CASE("delta_trace bound and temperature independence") {
  const QuadraticHamiltonian h_sys = models::kitaev_wire({2, 1.0, 1.0, 0.0});
  const QuadraticHamiltonian h_bath = models::bath_lattice({1, 10, 1.0, models::Boundary::open});
  const Mat hi = models::endpoint_coupling(4, 20, 0.5, 0);
  const QuadraticHamiltonian hj(assemble_joint(h_sys.matrix(), h_bath.matrix(), hi));

  const CovarianceMatrix ga = thermal_covariance(h_sys, std::numeric_limits<double>::infinity());
  const CovarianceMatrix gb = CovarianceMatrix(-ga.matrix());
  const std::vector<double> times = {0.0, 0.5, 1.0, 2.0, 4.0};

  const CovarianceMatrix bath_hot = thermal_covariance(h_bath, 0.1);
  const CovarianceMatrix bath_cold = thermal_covariance(h_bath, 10.0);
  const DeltaTrace hot = delta_trace(ga, gb, hj, bath_hot, times);
  const DeltaTrace cold = delta_trace(ga, gb, hj, bath_cold, times);

  for (size_t i = 0; i < times.size(); ++i) {
    CHECK(hot.delta_norms[i] <= 2.0 * hot.d_norms[i] * hot.d_norms[i] + 1e-9);
    CHECK(std::abs(hot.delta_norms[i] - cold.delta_norms[i]) < 1e-10);
  }

  const DeltaTrace same = delta_trace(ga, ga, hj, bath_hot, times);
  for (double n : same.delta_norms) CHECK(n < 1e-14);
}

TEST_CASE("delta conjugation submultiplicativity") {
  const QuadraticHamiltonian hj(random_skew(10, 71));
  const std::vector<int> sys = {0, 1, 2, 3};
  const Mat sigma = random_skew(4, 72);
  const PropagatorSlice s = propagator_slice(hj, sys, 1.8);
  const Mat conj = s.d * sigma * s.d.transpose();
  CHECK(operator_norm(conj) <= s.norm * s.norm * operator_norm(sigma) + 1e-12);

  const Mat via_delta = delta_matrix(sigma, hj, 4, 1.8);
  CHECK((via_delta - conj).norm() < 1e-12);
}
