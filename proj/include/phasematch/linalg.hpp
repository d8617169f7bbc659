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

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace phasematch {

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;
using DenseMatrix = Eigen::MatrixXcd;

/// Default tolerance for structural checks (unitarity, hermiticity, zero
/// diagonals).
inline constexpr double kStructuralTol = 1e-10;
/// Default tolerance when comparing two routes to the same amplitude.
inline constexpr double kEquivalenceTol = 1e-9;
/// Gram determinants at or below this are treated as a dependent basis.
inline constexpr double kGramDetFloor = 1e-12;

/// Raised when a set of basis vectors is (numerically) linearly dependent.
class DegenerateBasisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coordinates of a state over a possibly non-orthogonal basis.
struct GramDecomposition {
  std::vector<Complex> coefficients;
  /// ||state - sum_i coefficients[i] * basis[i]||
  double residual = 0.0;
};

DenseMatrix adjoint(const DenseMatrix& w);

/// max_ij |(W W^+ - I)_ij| <= tol. Throws std::invalid_argument on a
/// non-square input.
bool is_unitary(const DenseMatrix& w, double tol = kStructuralTol);

/// max_ij |W_ij - conj(W_ji)| <= tol.
bool is_hermitian(const DenseMatrix& w, double tol = kStructuralTol);

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// Expresses `state` over `basis` by solving the Gram normal equations
/// G c = r with G_ij = <b_i|b_j>, r_i = <b_i|state>.
///
/// Throws DegenerateBasisError when |det G| <= kGramDetFloor, and
/// std::invalid_argument on an empty basis or mismatched dimensions.
GramDecomposition gram_decompose(const StateVector& state,
                                 const std::vector<StateVector>& basis);

/// Deterministic pseudo-random unitary of size dim: the columns of a seeded
/// complex Gaussian matrix, orthonormalized left to right.
DenseMatrix random_unitary(Eigen::Index dim, std::uint64_t seed);

StateVector apply(const DenseMatrix& w, const StateVector& v);
DenseMatrix compose(const DenseMatrix& w1, const DenseMatrix& w2);

/// Computational basis vector e_index of length dim.
StateVector basis_state(Eigen::Index dim, Eigen::Index index);

}  // namespace phasematch
