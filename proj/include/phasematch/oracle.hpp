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

#pragma once

// Full-space reference simulator. Builds Q = -I_gamma V I_tau U as an
// explicit N x N matrix, evolves |gamma>, and reads subspace amplitudes off
// each state with a Gram decomposition.

#include "phasematch/engine2d.hpp"
#include "phasematch/engine4d.hpp"
#include "phasematch/linalg.hpp"
#include "phasematch/phase_operators.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace phasematch {

struct OracleConfig {
  Eigen::Index dim = 0;
  Eigen::Index gamma_index = 0;
  Eigen::Index tau_index = 0;
  double theta = 0.0;
  double phi = 0.0;
  DenseMatrix u_matrix;
  /// Absent means V = U^+ (the two-dimensional algorithm).
  std::optional<DenseMatrix> v_matrix;
  RotationFamily family = RotationFamily::kUnitary;
};

/// Config with gamma = 0 and tau = N - 1.
OracleConfig make_config(DenseMatrix u, double theta, double phi,
                         std::optional<DenseMatrix> v = std::nullopt);

/// Throws std::invalid_argument if indices, shapes, or unitarity are off.
void validate(const OracleConfig& cfg);

bool is_four_dim(const OracleConfig& cfg);

/// {|gamma>, U^+|tau>} or {|gamma>, VU|gamma>, V|tau>, U^+|tau>}.
std::vector<StateVector> invariant_basis(const OracleConfig& cfg);

DenseMatrix build_q(const OracleConfig& cfg);

struct OracleRun {
  std::vector<StateVector> states;  ///< Q^k|gamma>, k = 0..k_max
  std::vector<GramDecomposition> decompositions;
};

/// Applies q repeatedly to |gamma> and decomposes every iterate over
/// invariant_basis(cfg). Propagates DegenerateBasisError.
OracleRun evolve(const DenseMatrix& q, const OracleConfig& cfg, int k_max);

/// <tau| U Q^k |gamma>.
Complex target_amplitude(const OracleRun& run, const OracleConfig& cfg, int k);

DenseMatrix walsh_hadamard(int n_qubits);

/// Seeded unitary whose (tau, gamma) entry has modulus exactly `modulus`,
/// obtained by mixing column gamma with other columns through plane
/// rotations. Lets non-power-of-two N use |U_tau,gamma| = 1/sqrt(N).
DenseMatrix unitary_with_overlap(Eigen::Index dim, std::uint64_t seed,
                                 Eigen::Index gamma, Eigen::Index tau,
                                 double modulus);

/// Engine inputs read from the configuration's matrices.
AlgorithmParams two_dim_params(const OracleConfig& cfg);
FourDimInputs four_dim_inputs(const OracleConfig& cfg);

/// Worst-case figures from comparing an oracle run with the matching engine.
struct EquivalenceCheck {
  double max_deviation = 0.0;  ///< componentwise |oracle - engine|
  double max_residual = 0.0;   ///< worst Gram residual
  double max_norm_error = 0.0; ///< worst | ||Q^k gamma|| - 1 |
};

EquivalenceCheck check_two_dim(const OracleConfig& cfg, int k_max);
EquivalenceCheck check_four_dim(const OracleConfig& cfg, int k_max);

}  // namespace phasematch
