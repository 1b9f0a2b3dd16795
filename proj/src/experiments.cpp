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

#include "fermidec/experiments.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "fermidec/dynamics.hpp"
#include "fermidec/io.hpp"
#include "fermidec/majorana.hpp"
#include "fermidec/models.hpp"
#include "fermidec/oracle.hpp"
#include "fermidec/spectral.hpp"
#include "fermidec/weak_coupling.hpp"
#include "fermidec/markov.hpp"

namespace fermidec::experiments {

using nlohmann::json;

std::vector<double> ExperimentConfig::time_grid() const {
  std::vector<double> ts;
  for (int i = 0; i < n_times; ++i)
    ts.push_back(n_times > 1 ? t_max * i / (n_times - 1) : 0.0);
  return ts;
}

std::vector<std::string> experiment_names() {
  return {"simulate-closed", "simulate-joint", "derive-master",   "lindblad-demo",
          "temperature-sweep", "rate-report",  "oracle-compare",  "detailed-balance"};
}

namespace {

int worker_count() {
  if (const char* env = std::getenv("FERMIDEC_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Order-independent parallel map; results land at their input index.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
  const int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

double fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return static_cast<double>(h >> 12);  // fits a double exactly
}

std::string config_hash(const ExperimentConfig& c) {
  std::ostringstream ss;
  ss << c.experiment << '|' << c.model << '|' << c.n_sites << '|' << c.t_hop << '|' << c.delta_sc
     << '|' << c.mu << '|' << c.eta << '|' << c.bath_lx << '|' << c.bath_ly << '|'
     << c.bath_hopping << '|' << c.bath_boundary << '|' << c.coupling_strength << '|'
     << c.coupling_bath_site << '|' << c.epsilon_fraction << '|' << c.t_max << '|' << c.n_times
     << '|' << c.seed;
  for (double b : c.betas) ss << '|' << b;
  std::ostringstream out;
  out << std::hex << static_cast<uint64_t>(fnv1a(ss.str()));
  return out.str();
}

std::vector<std::string> manifest_for(const ExperimentConfig& c) {
  return {"experiment: " + c.experiment,
          "config-hash: " + config_hash(c),
          "convention: " + std::string(c.convention == Convention::paper ? "paper" : "calibrated"),
          "tolerances: skew=1e-12 state=1e-9 stab=1e-12*||X|| omega=1e-8*max|w|",
          "seed: " + std::to_string(c.seed)};
}

struct JointSetup {
  QuadraticHamiltonian h_joint;
  QuadraticHamiltonian h_sys;
  QuadraticHamiltonian h_bath;
  Mat h_i;
  int sys_dim;
};

JointSetup build_joint(const ExperimentConfig& c) {
  QuadraticHamiltonian h_sys =
      models::kitaev_wire({c.n_sites, c.t_hop, c.delta_sc, c.mu});
  QuadraticHamiltonian h_bath = models::bath_lattice(
      {c.bath_lx, c.bath_ly, c.bath_hopping,
       c.bath_boundary == "periodic" ? models::Boundary::periodic : models::Boundary::open});
  Mat h_i = models::endpoint_coupling(h_sys.dim(), h_bath.dim(), c.coupling_strength,
                                      c.coupling_bath_site);
  Mat joint = assemble_joint(h_sys.matrix(), h_bath.matrix(), h_i);
  return {QuadraticHamiltonian(std::move(joint)), std::move(h_sys), std::move(h_bath),
          std::move(h_i), 2 * c.n_sites};
}

/// Two system ground states differing only in the edge-mode occupation.
std::pair<Mat, Mat> edge_state_pair(const QuadraticHamiltonian& h_sys) {
  const NormalForm nf = skew_normal_form(h_sys.matrix());
  const int n = static_cast<int>(nf.epsilons.size());
  Mat d_plus = Mat::Zero(2 * n, 2 * n);
  Mat d_minus = Mat::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    const bool kernel =
        std::find(nf.kernel_blocks.begin(), nf.kernel_blocks.end(), j) != nf.kernel_blocks.end();
    const double occ_plus = kernel ? 1.0 : -1.0;  // flip only the kernel (edge) mode
    d_plus(2 * j, 2 * j + 1) = occ_plus;
    d_plus(2 * j + 1, 2 * j) = -occ_plus;
    d_minus(2 * j, 2 * j + 1) = -1.0;
    d_minus(2 * j + 1, 2 * j) = 1.0;
  }
  return {nf.o * d_plus * nf.o.transpose(), nf.o * d_minus * nf.o.transpose()};
}

std::string csv_path(const ExperimentConfig& c, const std::string& suffix) {
  return c.output_prefix + "_" + suffix;
}

std::vector<std::string> run_simulate_closed(const ExperimentConfig& c) {
  const QuadraticHamiltonian h = models::kitaev_wire({c.n_sites, c.t_hop, c.delta_sc, c.mu});
  const double beta = c.betas.empty() ? 1.0 : c.betas[0];
  const CovarianceMatrix g0 = thermal_covariance(h, beta);
  io::CsvTable table;
  table.manifest = manifest_for(c);
  table.columns = {"t", "norm_gamma", "drift_from_initial"};
  for (double t : c.time_grid()) {
    const CovarianceMatrix g = evolve_closed(g0, h, t);
    table.rows.push_back({t, operator_norm(g.matrix()),
                          (g.matrix() - g0.matrix()).cwiseAbs().maxCoeff()});
  }
  const std::string path = csv_path(c, "closed.csv");
  io::write_csv_file(path, table);
  return {path};
}

std::vector<std::string> run_simulate_joint(const ExperimentConfig& c) {
  const JointSetup js = build_joint(c);
  std::vector<int> sys(js.sys_dim);
  for (int i = 0; i < js.sys_dim; ++i) sys[i] = i;
  io::CsvTable table;
  table.manifest = manifest_for(c);
  table.columns = {"t", "norm_D", "bound_2D2"};
  const auto ts = c.time_grid();
  std::vector<std::array<double, 3>> rows(ts.size());
  parallel_for(static_cast<int>(ts.size()), [&](int i) {
    const PropagatorSlice s = propagator_slice(js.h_joint, sys, ts[i]);
    rows[i] = {ts[i], s.norm, 2.0 * s.norm * s.norm};
  });
  for (const auto& r : rows) table.rows.push_back({r[0], r[1], r[2]});
  const std::string path = csv_path(c, "joint.csv");
  io::write_csv_file(path, table);
  return {path};
}

std::vector<std::string> run_derive_master(const ExperimentConfig& c) {
  const JointSetup js = build_joint(c);
  const double bandwidth = models::spectral_bandwidth(js.h_bath);
  const BathCorrelation bc(js.h_i, js.h_bath.matrix(), c.epsilon_fraction * bandwidth);
  const double beta = c.betas.empty() ? 1.0 : c.betas[0];
  const CovarianceMatrix gamma_b = thermal_covariance(js.h_bath, beta);
  DerivationReport report;
  const GaussianChannel ch = derive_generator(js.h_sys, bc, gamma_b, tol::omega_rel, &report);

  const std::string ch_path = csv_path(c, "channel.json");
  {
    std::ofstream out(ch_path);
    out << io::channel_to_json(ch) << '\n';
  }
  json rep;
  rep["epsilon"] = report.epsilon;
  rep["omegas"] = std::vector<double>(report.omegas.data(),
                                      report.omegas.data() + report.omegas.size());
  rep["degeneracy_classes"] = report.degeneracy_classes;
  rep["imag_residue_x"] = report.imag_residue_x;
  rep["imag_residue_y"] = report.imag_residue_y;
  rep["secular_defect"] = report.secular_defect;
  const std::string rep_path = csv_path(c, "derivation.json");
  {
    std::ofstream out(rep_path);
    out << rep.dump(2) << '\n';
  }
  return {ch_path, rep_path};
}

std::vector<std::string> run_lindblad_demo(const ExperimentConfig& c) {
  const QuadraticHamiltonian h = models::kitaev_wire({c.n_sites, c.t_hop, c.delta_sc, c.mu});
  const LindbladSpec spec = models::uniform_loss_spec(c.n_sites, c.eta);
  const GaussianChannel ch = build_channel(h, spec, c.convention);
  const double rate = c.convention == Convention::paper ? c.eta * c.eta / 2.0 : c.eta * c.eta;
  io::CsvTable table;
  table.manifest = manifest_for(c);
  table.columns = {"t", "norm_expXt", "envelope"};
  for (double t : c.time_grid())
    table.rows.push_back({t, operator_norm(expm(ch.x, t)), std::exp(-rate * t)});
  const std::string path = csv_path(c, "lindblad.csv");
  io::write_csv_file(path, table);

  // Fitted slope of log||e^{Xt}|| must match the analytic envelope.
  double num = 0.0, den = 0.0;
  for (const auto& row : table.rows) {
    if (row[0] == 0.0) continue;
    num += std::log(row[1]) * row[0];
    den += row[0] * row[0];
  }
  if (den > 0.0 && std::abs(-num / den - rate) > 1e-6 * rate)
    throw PhysicsError("lindblad-demo: decay envelope does not match analytic rate");
  return {path};
}

std::vector<std::string> run_temperature_sweep(const ExperimentConfig& c) {
  const JointSetup js = build_joint(c);
  const auto [g_plus, g_minus] = edge_state_pair(js.h_sys);
  const CovarianceMatrix sys_a = CovarianceMatrix::unchecked(g_plus);
  const CovarianceMatrix sys_b = CovarianceMatrix::unchecked(g_minus);
  const auto ts = c.time_grid();
  std::vector<double> betas = c.betas.empty() ? std::vector<double>{0.1, 1.0, 10.0} : c.betas;

  std::vector<std::string> paths(betas.size());
  std::vector<DeltaTrace> traces(betas.size());
  parallel_for(static_cast<int>(betas.size()), [&](int i) {
    const CovarianceMatrix gamma_b = thermal_covariance(js.h_bath, betas[i]);
    traces[i] = delta_trace(sys_a, sys_b, js.h_joint, gamma_b, ts);
  });
  for (size_t i = 0; i < betas.size(); ++i) {
    io::CsvTable table;
    table.manifest = manifest_for(c);
    table.manifest.push_back("beta: " + io::format_double(betas[i]));
    table.columns = {"t", "norm_delta", "norm_D", "bound_2D2"};
    for (size_t k = 0; k < traces[i].times.size(); ++k)
      table.rows.push_back({traces[i].times[k], traces[i].delta_norms[k], traces[i].d_norms[k],
                            2.0 * traces[i].d_norms[k] * traces[i].d_norms[k]});
    std::ostringstream name;
    name << "delta_beta" << i << ".csv";
    paths[i] = csv_path(c, name.str());
    io::write_csv_file(paths[i], table);
  }
  return paths;
}

std::vector<std::string> run_rate_report(const ExperimentConfig& c) {
  const QuadraticHamiltonian h = models::kitaev_wire({c.n_sites, c.t_hop, c.delta_sc, c.mu});
  const LindbladSpec spec = models::uniform_loss_spec(c.n_sites, c.eta);
  const GaussianChannel ch = build_channel(h, spec, c.convention);
  const GeneratorSplit split = split_generator(ch.x);
  const BlockDecomposition bd = block_decompose(ch.x, h);
  const auto [g_plus, g_minus] = edge_state_pair(h);
  const int ng = static_cast<int>(bd.x_g.rows());
  const Mat dpsi = (bd.o.transpose() * g_plus * bd.o).topLeftCorner(ng, ng);
  const Mat dphi = (bd.o.transpose() * g_minus * bd.o).topLeftCorner(ng, ng);
  const RateReport report = decoherence_bound(bd.x_g, dpsi, dphi, c.time_grid());

  json j;
  j["lambda_p"] = Eigen::SelfAdjointEigenSolver<Mat>(split.p, Eigen::EigenvaluesOnly)
                      .eigenvalues()
                      .minCoeff();
  j["lambda_pg"] = report.lambda_pg;
  j["gap"] = system_eigenbasis(h).gap();
  j["leakage"] = bd.leakage;
  const std::string jpath = csv_path(c, "rate.json");
  {
    std::ofstream out(jpath);
    out << j.dump(2) << '\n';
  }
  io::CsvTable table;
  table.manifest = manifest_for(c);
  table.columns = {"t", "delta_norm", "bound"};
  for (size_t i = 0; i < report.times.size(); ++i)
    table.rows.push_back({report.times[i], report.delta_norms[i], report.bound_curve[i]});
  const std::string cpath = csv_path(c, "rate_curve.csv");
  io::write_csv_file(cpath, table);
  return {jpath, cpath};
}

std::vector<std::string> run_oracle_compare(const ExperimentConfig& c) {
  const int n = std::clamp(c.n_sites, 1, 4);
  std::mt19937 rng(c.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int dim = 2 * n;

  Mat hm(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int k = r + 1; k < dim; ++k) {
      hm(r, k) = gauss(rng);
      hm(k, r) = -hm(r, k);
    }
  hm.diagonal().setZero();
  const QuadraticHamiltonian h(hm);
  // Uniform loss keeps X Hurwitz; the random vector exercises the generic M.
  LindbladSpec spec = models::uniform_loss_spec(n, 0.5);
  CVec l(dim);
  for (int j = 0; j < dim; ++j) l(j) = 0.4 * Complex(gauss(rng), gauss(rng));
  spec.ls.push_back(l);

  const oracle::FockOperatorSet ops(n);
  const GaussianChannel ch = build_channel(h, spec, Convention::calibrated);
  const CovarianceMatrix gamma_ss = steady_state(ch);
  const CovarianceMatrix g0 = thermal_covariance(h, 1.0);
  const oracle::DensityMatrix rho0 = oracle::gibbs_state(h, 1.0, ops);

  io::CsvTable table;
  table.manifest = manifest_for(c);
  table.columns = {"t", "max_deviation"};
  double worst = 0.0;
  for (double t : c.time_grid()) {
    const CovarianceMatrix via_channel = propagate(ch, g0, t, gamma_ss);
    const CovarianceMatrix via_oracle =
        oracle::covariance_of(oracle::lindblad_evolve(rho0, h, spec, t, ops), ops);
    const double dev = (via_channel.matrix() - via_oracle.matrix()).cwiseAbs().maxCoeff();
    worst = std::max(worst, dev);
    table.rows.push_back({t, dev});
  }
  const std::string path = csv_path(c, "oracle.csv");
  io::write_csv_file(path, table);
  if (worst > 1e-8)
    throw PhysicsError("oracle-compare: channel and Hilbert-space evolution disagree");
  return {path};
}

std::vector<std::string> run_detailed_balance(const ExperimentConfig& c) {
  const double eta = c.eta > 0.0 ? c.eta : 0.3;
  io::CsvTable table;
  table.manifest = manifest_for(c);
  table.columns = {"alpha", "decay_factor", "db_defect"};
  for (int i = 1; i <= 9; ++i) {
    const double alpha = 0.1 * i;
    const markov::TwoStateChain chain = markov::build_p_eta(alpha, eta);
    const Eigen::Vector2d v0(std::min(1.0, alpha + 0.05), 1.0 - std::min(1.0, alpha + 0.05));
    const markov::Trajectory traj = markov::converge(chain, v0, 20);
    const double factor = traj.dist_to_pi_l1[1] > 0.0 && traj.dist_to_pi_l1[0] > 0.0
                              ? traj.dist_to_pi_l1[1] / traj.dist_to_pi_l1[0]
                              : 1.0 - eta;
    table.rows.push_back({alpha, factor, chain.detailed_balance_defect()});
  }
  const std::string path = csv_path(c, "db.csv");
  io::write_csv_file(path, table);
  return {path};
}

}  // namespace

static ExperimentConfig parse_config_impl(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }

  ExperimentConfig c;
  const auto known_root = {"experiment", "model",  "bath",   "coupling", "times",
                           "output",     "convention", "seed", "eta"};
  for (const auto& [key, _] : j.items()) {
    if (std::find(known_root.begin(), known_root.end(), key) == known_root.end())
      throw ConfigError("config: unknown key '" + key + "'");
  }

  if (!j.contains("experiment") || !j["experiment"].is_string())
    throw ConfigError("config.experiment: required string");
  c.experiment = j["experiment"].get<std::string>();
  const auto names = experiment_names();
  if (std::find(names.begin(), names.end(), c.experiment) == names.end())
    throw ConfigError("config.experiment: unknown experiment '" + c.experiment + "'");

  if (j.contains("model")) {
    const json& m = j["model"];
    for (const auto& [key, _] : m.items()) {
      if (key != "name" && key != "n_sites" && key != "t_hop" && key != "delta_sc" && key != "mu")
        throw ConfigError("config.model: unknown key '" + key + "'");
    }
    if (m.contains("name")) c.model = m["name"].get<std::string>();
    if (c.model != "kitaev") throw ConfigError("config.model.name: unknown model '" + c.model + "'");
    if (m.contains("n_sites")) c.n_sites = m["n_sites"].get<int>();
    if (m.contains("t_hop")) c.t_hop = m["t_hop"].get<double>();
    if (m.contains("delta_sc")) c.delta_sc = m["delta_sc"].get<double>();
    if (m.contains("mu")) c.mu = m["mu"].get<double>();
  }
  if (j.contains("eta")) c.eta = j["eta"].get<double>();

  if (j.contains("bath")) {
    const json& b = j["bath"];
    for (const auto& [key, _] : b.items()) {
      if (key != "lx" && key != "ly" && key != "hopping" && key != "boundary" && key != "beta")
        throw ConfigError("config.bath: unknown key '" + key + "'");
    }
    if (b.contains("lx")) c.bath_lx = b["lx"].get<int>();
    if (b.contains("ly")) c.bath_ly = b["ly"].get<int>();
    if (b.contains("hopping")) c.bath_hopping = b["hopping"].get<double>();
    if (b.contains("boundary")) {
      c.bath_boundary = b["boundary"].get<std::string>();
      if (c.bath_boundary != "open" && c.bath_boundary != "periodic")
        throw ConfigError("config.bath.boundary: must be 'open' or 'periodic'");
    }
    if (b.contains("beta")) {
      if (b["beta"].is_array())
        for (const auto& v : b["beta"]) c.betas.push_back(v.get<double>());
      else
        c.betas.push_back(b["beta"].get<double>());
    }
  }

  if (j.contains("coupling")) {
    const json& cp = j["coupling"];
    for (const auto& [key, _] : cp.items()) {
      if (key != "strength" && key != "bath_site" && key != "epsilon_fraction")
        throw ConfigError("config.coupling: unknown key '" + key + "'");
    }
    if (cp.contains("strength")) c.coupling_strength = cp["strength"].get<double>();
    if (cp.contains("bath_site")) c.coupling_bath_site = cp["bath_site"].get<int>();
    if (cp.contains("epsilon_fraction")) c.epsilon_fraction = cp["epsilon_fraction"].get<double>();
  }

  if (j.contains("times")) {
    const json& t = j["times"];
    for (const auto& [key, _] : t.items()) {
      if (key != "t_max" && key != "n")
        throw ConfigError("config.times: unknown key '" + key + "'");
    }
    if (t.contains("t_max")) c.t_max = t["t_max"].get<double>();
    if (t.contains("n")) c.n_times = t["n"].get<int>();
    if (c.n_times < 1) throw ConfigError("config.times.n: must be >= 1");
  }

  if (j.contains("output")) c.output_prefix = j["output"].get<std::string>();
  if (j.contains("convention")) {
    const std::string conv = j["convention"].get<std::string>();
    if (conv == "paper") c.convention = Convention::paper;
    else if (conv == "calibrated") c.convention = Convention::calibrated;
    else throw ConfigError("config.convention: must be 'calibrated' or 'paper'");
  }
  if (j.contains("seed")) c.seed = j["seed"].get<unsigned>();

  const double finite_check[] = {c.t_hop, c.delta_sc, c.mu,   c.eta,
                                 c.bath_hopping, c.coupling_strength, c.t_max};
  for (double v : finite_check)
    if (!std::isfinite(v)) throw ConfigError("config: physical parameters must be finite");
  return c;
}

ExperimentConfig parse_config(const std::string& json_text) {
  try {
    return parse_config_impl(json_text);
  } catch (const json::exception& e) {
    // overflow / wrong-type diagnostics from the JSON layer are config errors
    throw ConfigError(std::string("config: ") + e.what());
  }
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::vector<std::string> run_experiment(const ExperimentConfig& c) {
  if (c.experiment == "simulate-closed") return run_simulate_closed(c);
  if (c.experiment == "simulate-joint") return run_simulate_joint(c);
  if (c.experiment == "derive-master") return run_derive_master(c);
  if (c.experiment == "lindblad-demo") return run_lindblad_demo(c);
  if (c.experiment == "temperature-sweep") return run_temperature_sweep(c);
  if (c.experiment == "rate-report") return run_rate_report(c);
  if (c.experiment == "oracle-compare") return run_oracle_compare(c);
  if (c.experiment == "detailed-balance") return run_detailed_balance(c);
  throw ConfigError("config.experiment: unknown experiment '" + c.experiment + "'");
}

int exit_code_for_current_exception() {
  try {
    throw;
  } catch (const ConfigError&) {
    return kConfigError;
  } catch (const PhysicsError&) {
    return kPhysicsError;
  } catch (const StructuralError&) {
    return kConfigError;
  } catch (const std::exception&) {
    return kToleranceError;
  }
}

}  // namespace fermidec::experiments
