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

#include "fermidec/models.hpp"

namespace fermidec::models {

void QuadraticBuilder::add_majorana_term(int a, int b, double alpha) {
  if (a < 0 || b < 0 || a >= h_.rows() || b >= h_.rows() || a == b)
    throw StructuralError("QuadraticBuilder: bad Majorana indices");
  h_(a, b) += 2.0 * alpha;
  h_(b, a) -= 2.0 * alpha;
}

// Dirac -> Majorana with a_m = (c_{2m} - i c_{2m+1})/2 (0-based pairs):
//   a_m^+ a_m            = 1/2 - (i/2) c_{2m} c_{2m+1}
//   a_j^+ a_k + h.c.     = -(i/2) c_{2j} c_{2k+1} + (i/2) c_{2j+1} c_{2k}
//   a_j a_k + h.c.       = -(i/2) c_{2j} c_{2k+1} - (i/2) c_{2j+1} c_{2k}

void QuadraticBuilder::add_chemical_potential(int mode, double mu) {
  add_majorana_term(2 * mode, 2 * mode + 1, mu / 2.0);
}

void QuadraticBuilder::add_hopping(int j, int k, double t) {
  add_majorana_term(2 * j, 2 * k + 1, t / 2.0);
  add_majorana_term(2 * j + 1, 2 * k, -t / 2.0);
}

void QuadraticBuilder::add_pairing(int j, int k, double delta) {
  add_majorana_term(2 * j, 2 * k + 1, -delta / 2.0);
  add_majorana_term(2 * j + 1, 2 * k, -delta / 2.0);
}

QuadraticHamiltonian kitaev_wire(const KitaevParams& p) {
  if (p.n_sites < 2) throw StructuralError("kitaev_wire: need at least 2 sites");
  QuadraticBuilder b(2 * p.n_sites);
  for (int j = 0; j < p.n_sites; ++j) b.add_chemical_potential(j, p.mu);
  for (int j = 0; j + 1 < p.n_sites; ++j) {
    b.add_hopping(j, j + 1, p.t_hop);
    b.add_pairing(j, j + 1, p.delta_sc);
  }
  return b.build();
}

QuadraticHamiltonian bath_lattice(const BathParams& p) {
  if (p.lx < 1 || p.ly < 1) throw StructuralError("bath_lattice: extents must be positive");
  const int n = p.lx * p.ly;
  QuadraticBuilder b(2 * n);
  const auto site = [&](int x, int y) { return y * p.lx + x; };
  for (int y = 0; y < p.ly; ++y) {
    for (int x = 0; x < p.lx; ++x) {
      if (x + 1 < p.lx) b.add_hopping(site(x, y), site(x + 1, y), p.hopping);
      else if (p.boundary == Boundary::periodic && p.lx > 2)
        b.add_hopping(site(x, y), site(0, y), p.hopping);
      if (y + 1 < p.ly) b.add_hopping(site(x, y), site(x, y + 1), p.hopping);
      else if (p.boundary == Boundary::periodic && p.ly > 2)
        b.add_hopping(site(x, y), site(x, 0), p.hopping);
    }
  }
  return b.build();
}

double spectral_bandwidth(const QuadraticHamiltonian& h) {
  const NormalForm nf = skew_normal_form(h.matrix());
  double w = 0.0;
  for (double e : nf.epsilons) w = std::max(w, e);
  return w;
}

Mat endpoint_coupling(int sys_dim, int bath_dim, double strength, int bath_site) {
  if (bath_site < 0 || bath_site >= bath_dim)
    throw StructuralError("endpoint_coupling: bath site out of range");
  if (sys_dim < 1) throw StructuralError("endpoint_coupling: empty system");
  Mat h_i = Mat::Zero(bath_dim, sys_dim);
  h_i(bath_site, 0) = strength;
  return h_i;
}

LindbladSpec uniform_loss_spec(int n_modes, double eta) {
  if (eta < 0.0) throw PhysicsError("uniform_loss_spec: eta must be nonnegative");
  LindbladSpec spec;
  for (int m = 0; m < n_modes; ++m) {
    CVec l = CVec::Zero(2 * n_modes);
    l(2 * m) = eta / 2.0;
    l(2 * m + 1) = Complex(0.0, eta / 2.0);
    spec.ls.push_back(l);
  }
  return spec;
}

}  // namespace fermidec::models
