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

#include "phasematch/hermitian.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace phasematch {

namespace {

void require_even(Eigen::Index dim, const char* what) {
  if (dim < 2 || dim % 2 != 0) {
    throw std::invalid_argument(std::string(what) + ": dimension " +
                                std::to_string(dim) + " is not a positive even number");
  }
}

DenseMatrix pairing_basis(Eigen::Index dim) {
  const Eigen::Index half = dim / 2;
  const double s = 1.0 / std::sqrt(2.0);
  DenseMatrix basis = DenseMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < half; ++i) {
    basis(2 * i, i) = s;
    basis(2 * i + 1, i) = s;
    basis(2 * i, half + i) = s;
    basis(2 * i + 1, half + i) = -s;
  }
  return basis;
}

}  // namespace

DenseMatrix pair_swap(Eigen::Index dim) {
  require_even(dim, "pair_swap");
  DenseMatrix p = DenseMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; i += 2) {
    p(i, i + 1) = 1.0;
    p(i + 1, i) = 1.0;
  }
  return p;
}

BlockSymmetry block_symmetry(const DenseMatrix& v, double tol) {
  if (v.rows() != v.cols()) {
    throw std::invalid_argument("block_symmetry: matrix is not square");
  }
  require_even(v.rows(), "block_symmetry");

  double worst = 0.0;
  for (Eigen::Index i = 0; i < v.rows(); i += 2) {
    for (Eigen::Index j = 0; j < v.cols(); j += 2) {
      worst = std::max(worst, std::abs(v(i, j) - v(i + 1, j + 1)));
      worst = std::max(worst, std::abs(v(i, j + 1) - v(i + 1, j)));
    }
  }
  const DenseMatrix p = pair_swap(v.rows());
  return {worst <= tol, max_abs_diff(v, p * v * p) <= tol};
}

bool is_block_symmetric(const DenseMatrix& v, double tol) {
  return block_symmetry(v, tol).by_blocks;
}

DenseMatrix commuting_unitary_from_blocks(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw std::invalid_argument(
        "commuting_unitary_from_blocks: blocks must be square and equal-sized");
  }
  const Eigen::Index half = a.rows();
  const Eigen::Index dim = 2 * half;
  require_even(dim, "commuting_unitary_from_blocks");
  DenseMatrix d = DenseMatrix::Zero(dim, dim);
  d.topLeftCorner(half, half) = a;
  d.bottomRightCorner(half, half) = b;
  const DenseMatrix s = pairing_basis(dim);
  return s * d * s.adjoint();
}

DenseMatrix random_commuting_unitary(Eigen::Index dim, std::uint64_t seed) {
  require_even(dim, "random_commuting_unitary");
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), 0x50414952u};
  std::mt19937_64 derive(seq);
  const std::uint64_t seed_a = derive();
  const std::uint64_t seed_b = derive();
  return commuting_unitary_from_blocks(random_unitary(dim / 2, seed_a),
                                       random_unitary(dim / 2, seed_b));
}

CommutingUnitaryPair companion(const DenseMatrix& v, double tol) {
  if (!is_unitary(v, tol)) {
    throw std::invalid_argument("companion: V is not unitary");
  }
  if (!is_block_symmetric(v, tol)) {
    throw std::invalid_argument("companion: V is not block-symmetric (V != PVP)");
  }
  return {v, v.adjoint() * pair_swap(v.rows()), v.rows()};
}

HermitianInvolution hermitian_iff_involution(const DenseMatrix& w, double tol) {
  if (!is_unitary(w, tol)) {
    throw std::invalid_argument("hermitian_iff_involution: W is not unitary");
  }
  const DenseMatrix id = DenseMatrix::Identity(w.rows(), w.cols());
  return {is_hermitian(w, tol), max_abs_diff(w * w, id) <= tol};
}

}  // namespace phasematch
