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

#include "fermidec/channel.hpp"
#include "fermidec/majorana.hpp"

namespace fermidec::models {

/// Helper for building Majorana-basis Hamiltonians term by term. Each call
/// adds i * alpha * c_a c_b to the operator, i.e. entries +-2 alpha to the
/// coefficient matrix of H_hat = (i/4) sum h_jk c_j c_k.
class QuadraticBuilder {
 public:
  explicit QuadraticBuilder(int majorana_count) : h_(Mat::Zero(majorana_count, majorana_count)) {}

  void add_majorana_term(int a, int b, double alpha);

  /// -mu (a_m^+ a_m - 1/2) on Dirac mode m.
  void add_chemical_potential(int mode, double mu);
  /// -t (a_j^+ a_k + a_k^+ a_j).
  void add_hopping(int j, int k, double t);
  /// delta (a_j a_k + a_k^+ a_j^+).
  void add_pairing(int j, int k, double delta);

  QuadraticHamiltonian build() const { return QuadraticHamiltonian(h_); }

 private:
  Mat h_;
};

struct KitaevParams {
  int n_sites = 2;
  double t_hop = 1.0;
  double delta_sc = 1.0;
  double mu = 0.0;
};

/// 1D p-wave wire. At mu = 0, t = delta the edge Majoranas c_1 and c_{2n}
/// decouple and the normal form has exactly one zero block.
QuadraticHamiltonian kitaev_wire(const KitaevParams& p);

enum class Boundary { open, periodic };

struct BathParams {
  int lx = 1;
  int ly = 1;
  double hopping = 1.0;
  Boundary boundary = Boundary::open;
};

/// Nearest-neighbor hopping lattice of Dirac fermions (Majorana matrix form).
QuadraticHamiltonian bath_lattice(const BathParams& p);

/// Largest normal-form coefficient of a Hamiltonian (its spectral bandwidth).
double spectral_bandwidth(const QuadraticHamiltonian& h);

/// Rank-one coupling H_I: a single bath Majorana attached to system Majorana
/// c_1 (0-based system column 0) with the given strength.
Mat endpoint_coupling(int sys_dim, int bath_dim, double strength, int bath_site);

/// One Lindblad vector per Dirac mode: L_mu = eta a_mu^+ =
/// (eta/2)(c_{2mu-1} + i c_{2mu}).
LindbladSpec uniform_loss_spec(int n_modes, double eta);

}  // namespace fermidec::models
