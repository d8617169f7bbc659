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

#include "phasematch/linalg.hpp"

#include <cstdint>

namespace phasematch {

/// Block-diagonal permutation diag(X, X, ..., X) with X = [[0,1],[1,0]],
/// swapping basis states 2i and 2i+1 (zero-based). Throws
/// std::invalid_argument for odd or non-positive dim.
DenseMatrix pair_swap(Eigen::Index dim);

struct BlockSymmetry {
  bool by_blocks = false;      ///< every 2x2 block has the form [[a,b],[b,a]]
  bool by_conjugation = false; ///< ||V - PVP||_max <= tol
};

/// Evaluates both formulations of V = PVP.
BlockSymmetry block_symmetry(const DenseMatrix& v, double tol = kStructuralTol);

/// True when every 2x2 block of v is [[a,b],[b,a]] within tol.
bool is_block_symmetric(const DenseMatrix& v, double tol = kStructuralTol);

/// Conjugates diag(a, b) by the orthonormal pair basis
/// (e_2i + e_2i+1)/sqrt2 (first half), (e_2i - e_2i+1)/sqrt2 (second half),
/// which diagonalizes P. a and b must both be (dim/2) x (dim/2).
DenseMatrix commuting_unitary_from_blocks(const DenseMatrix& a, const DenseMatrix& b);

/// Seeded unitary V with V = PVP.
DenseMatrix random_commuting_unitary(Eigen::Index dim, std::uint64_t seed);

/// V together with U = V^+ P, so that VU = UV = P.
struct CommutingUnitaryPair {
  DenseMatrix v;
  DenseMatrix u;
  Eigen::Index dim = 0;
};

/// Throws std::invalid_argument unless v is unitary and block-symmetric.
CommutingUnitaryPair companion(const DenseMatrix& v, double tol = kStructuralTol);

struct HermitianInvolution {
  bool hermitian = false;
  bool involution = false;
};

/// For unitary W, W = W^+ exactly when W W = I; both flags are computed
/// independently. Throws std::invalid_argument if W is not unitary.
HermitianInvolution hermitian_iff_involution(const DenseMatrix& w,
                                             double tol = kStructuralTol);

}  // namespace phasematch
