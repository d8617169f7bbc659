// Copyright 2026 The phasematch Authors
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

#include "phasematch/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace phasematch {

namespace {

void require_index(Eigen::Index idx, Eigen::Index dim, const char* what) {
  if (idx < 0 || idx >= dim) {
    throw std::invalid_argument(std::string(what) + " index " + std::to_string(idx) +
                                " outside [0, " + std::to_string(dim) + ")");
  }
}

DenseMatrix v_or_default(const OracleConfig& cfg) {
  return cfg.v_matrix ? *cfg.v_matrix : DenseMatrix(cfg.u_matrix.adjoint());
}

}  // namespace

OracleConfig make_config(DenseMatrix u, double theta, double phi,
                         std::optional<DenseMatrix> v) {
  OracleConfig cfg;
  cfg.dim = u.rows();
  cfg.gamma_index = 0;
  cfg.tau_index = cfg.dim - 1;
  cfg.theta = theta;
  cfg.phi = phi;
  cfg.u_matrix = std::move(u);
  cfg.v_matrix = std::move(v);
  return cfg;
}

void validate(const OracleConfig& cfg) {
  if (cfg.dim < 2) throw std::invalid_argument("oracle: dimension must be >= 2");
  require_index(cfg.gamma_index, cfg.dim, "gamma");
  require_index(cfg.tau_index, cfg.dim, "tau");
  if (cfg.gamma_index == cfg.tau_index) {
    throw std::invalid_argument("oracle: gamma and tau must differ");
  }
  if (cfg.u_matrix.rows() != cfg.dim || cfg.u_matrix.cols() != cfg.dim) {
    throw std::invalid_argument("oracle: U has the wrong shape");
  }
  if (!is_unitary(cfg.u_matrix, kStructuralTol)) {
    throw std::invalid_argument("oracle: U is not unitary");
  }
  if (cfg.v_matrix) {
    if (cfg.v_matrix->rows() != cfg.dim || cfg.v_matrix->cols() != cfg.dim) {
      throw std::invalid_argument("oracle: V has the wrong shape");
    }
    if (!is_unitary(*cfg.v_matrix, kStructuralTol)) {
      throw std::invalid_argument("oracle: V is not unitary");
    }
  }
}

bool is_four_dim(const OracleConfig& cfg) { return cfg.v_matrix.has_value(); }

std::vector<StateVector> invariant_basis(const OracleConfig& cfg) {
  const StateVector gamma = basis_state(cfg.dim, cfg.gamma_index);
  const StateVector tau = basis_state(cfg.dim, cfg.tau_index);
  const StateVector u_inv_tau = cfg.u_matrix.adjoint() * tau;
  if (!is_four_dim(cfg)) return {gamma, u_inv_tau};
  const DenseMatrix& v = *cfg.v_matrix;
  return {gamma, v * (cfg.u_matrix * gamma), v * tau, u_inv_tau};
}

DenseMatrix build_q(const OracleConfig& cfg) {
  validate(cfg);
  const DenseMatrix i_gamma = build({cfg.gamma_index, cfg.theta, cfg.family}, cfg.dim);
  const DenseMatrix i_tau = build({cfg.tau_index, cfg.phi, cfg.family}, cfg.dim);
  return -(i_gamma * v_or_default(cfg) * i_tau * cfg.u_matrix);
}

OracleRun evolve(const DenseMatrix& q, const OracleConfig& cfg, int k_max) {
  if (k_max < 0) throw std::invalid_argument("evolve: k_max must be >= 0");
  if (q.rows() != cfg.dim || q.cols() != cfg.dim) {
    throw std::invalid_argument("evolve: Q does not match the configuration");
  }
  const auto basis = invariant_basis(cfg);
  OracleRun run;
  run.states.reserve(static_cast<std::size_t>(k_max) + 1);
  run.decompositions.reserve(static_cast<std::size_t>(k_max) + 1);
  StateVector state = basis_state(cfg.dim, cfg.gamma_index);
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) state = q * state;
    run.decompositions.push_back(gram_decompose(state, basis));
    run.states.push_back(state);
  }
  return run;
}

Complex target_amplitude(const OracleRun& run, const OracleConfig& cfg, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= run.states.size()) {
    throw std::out_of_range("target_amplitude: step " + std::to_string(k) +
                            " not in the run");
  }
  require_index(cfg.tau_index, cfg.dim, "tau");
  return (cfg.u_matrix.row(cfg.tau_index) * run.states[k]).value();
}

DenseMatrix walsh_hadamard(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 16) {
    throw std::invalid_argument("walsh_hadamard: n_qubits must be in [1, 16]");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  DenseMatrix w(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const int parity = std::popcount(static_cast<std::uint64_t>(i & j)) & 1;
      w(i, j) = parity ? -scale : scale;
    }
  }
  return w;
}

DenseMatrix unitary_with_overlap(Eigen::Index dim, std::uint64_t seed,
                                 Eigen::Index gamma, Eigen::Index tau,
                                 double modulus) {
  require_index(gamma, dim, "gamma");
  require_index(tau, dim, "tau");
  if (gamma == tau) throw std::invalid_argument("unitary_with_overlap: gamma == tau");
  if (!(modulus >= 0.0 && modulus <= 1.0)) {
    throw std::invalid_argument("unitary_with_overlap: modulus must lie in [0, 1]");
  }
  DenseMatrix w = random_unitary(dim, seed);

  // Right-multiplying by a plane rotation G in the (gamma, j) column plane
  // keeps W unitary and sends W_tau,gamma to c x + s y.
  auto rotate = [&](Eigen::Index j, double t) {
    const Complex x = w(tau, gamma);
    const Complex y = w(tau, j);
    const Complex align = (std::abs(y) > 0.0 && std::abs(x) > 0.0)
                              ? std::polar(1.0, std::arg(x) - std::arg(y))
                              : (std::abs(y) > 0.0 ? std::polar(1.0, -std::arg(y))
                                                   : Complex(1.0));
    const double c = std::cos(t);
    const Complex s = std::sin(t) * align;
    const StateVector cg = w.col(gamma);
    const StateVector cj = w.col(j);
    w.col(gamma) = c * cg + s * cj;
    w.col(j) = -std::conj(s) * cg + c * cj;
  };

  for (Eigen::Index j = 0; j < dim; ++j) {
    if (j == gamma) continue;
    const double ax = std::abs(w(tau, gamma));
    const double ay = std::abs(w(tau, j));
    const double reach = std::hypot(ax, ay);
    const double t0 = std::atan2(ay, ax);
    if (reach >= modulus - 1e-14) {  // allowance for rounding when modulus is 1
      rotate(j, t0 + std::acos(std::min(1.0, modulus / reach)));
      return w;
    }
    rotate(j, t0);  // pull all of row tau's weight in this plane into gamma
  }
  throw std::runtime_error("unitary_with_overlap: could not reach the requested modulus");
}

AlgorithmParams two_dim_params(const OracleConfig& cfg) {
  return {cfg.theta, cfg.phi, cfg.u_matrix(cfg.tau_index, cfg.gamma_index)};
}

FourDimInputs four_dim_inputs(const OracleConfig& cfg) {
  const DenseMatrix v = v_or_default(cfg);
  const auto g = cfg.gamma_index;
  const auto t = cfg.tau_index;
  return {
      cfg.theta,
      cfg.phi,
      cfg.u_matrix(t, g),
      v(g, t),
      (v * cfg.u_matrix)(g, g),
      (cfg.u_matrix * v)(t, t),
  };
}

EquivalenceCheck check_two_dim(const OracleConfig& cfg, int k_max) {
  if (is_four_dim(cfg)) {
    throw std::invalid_argument("check_two_dim: configuration carries a V matrix");
  }
  const auto run = evolve(build_q(cfg), cfg, k_max);
  const auto traj = iterate2(present_coeffs(two_dim_params(cfg)), k_max);
  EquivalenceCheck out;
  for (int k = 0; k <= k_max; ++k) {
    const auto& dec = run.decompositions[k];
    const auto& step = traj.steps[k];
    out.max_deviation = std::max({out.max_deviation, std::abs(dec.coefficients[0] - step.a),
                                  std::abs(dec.coefficients[1] - step.b)});
    out.max_residual = std::max(out.max_residual, dec.residual);
    out.max_norm_error = std::max(out.max_norm_error, std::abs(run.states[k].norm() - 1.0));
  }
  return out;
}

EquivalenceCheck check_four_dim(const OracleConfig& cfg, int k_max) {
  if (!is_four_dim(cfg)) {
    throw std::invalid_argument("check_four_dim: configuration has no V matrix");
  }
  const auto run = evolve(build_q(cfg), cfg, k_max);
  const auto traj = iterate4(four_dim_coeffs(four_dim_inputs(cfg)), k_max);
  EquivalenceCheck out;
  for (int k = 0; k <= k_max; ++k) {
    const auto& coef = run.decompositions[k].coefficients;
    const auto& s = traj.steps[k];
    out.max_deviation = std::max({out.max_deviation, std::abs(coef[0] - s.a),
                                  std::abs(coef[1] - s.b), std::abs(coef[2] - s.c),
                                  std::abs(coef[3] - s.d)});
    out.max_residual = std::max(out.max_residual, run.decompositions[k].residual);
    out.max_norm_error = std::max(out.max_norm_error, std::abs(run.states[k].norm() - 1.0));
  }
  return out;
}

}  // namespace phasematch
