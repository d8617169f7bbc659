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

#include "phasematch/linalg.hpp"

#include <cmath>
#include <random>
#include <string>

namespace phasematch {

namespace {

void require_square(const DenseMatrix& w, const char* what) {
  if (w.rows() != w.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix is " +
                                std::to_string(w.rows()) + "x" +
                                std::to_string(w.cols()) + ", not square");
  }
}

}  // namespace

DenseMatrix adjoint(const DenseMatrix& w) { return w.adjoint(); }

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_unitary(const DenseMatrix& w, double tol) {
  require_square(w, "is_unitary");
  const DenseMatrix id = DenseMatrix::Identity(w.rows(), w.cols());
  return max_abs_diff(w * w.adjoint(), id) <= tol;
}

bool is_hermitian(const DenseMatrix& w, double tol) {
  require_square(w, "is_hermitian");
  return max_abs_diff(w, w.adjoint()) <= tol;
}

GramDecomposition gram_decompose(const StateVector& state,
                                 const std::vector<StateVector>& basis) {
  if (basis.empty()) {
    throw std::invalid_argument("gram_decompose: empty basis");
  }
  const auto m = static_cast<Eigen::Index>(basis.size());
  DenseMatrix gram(m, m);
  StateVector rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& bi = basis[static_cast<std::size_t>(i)];
    if (bi.size() != state.size()) {
      throw std::invalid_argument("gram_decompose: basis vector " +
                                  std::to_string(i) +
                                  " has the wrong dimension");
    }
    for (Eigen::Index j = 0; j < m; ++j) {
      gram(i, j) = bi.dot(basis[static_cast<std::size_t>(j)]);  // <b_i|b_j>
    }
    rhs(i) = bi.dot(state);
  }

  const Eigen::PartialPivLU<DenseMatrix> lu(gram);
  const double det = std::abs(lu.determinant());
  if (!(det > kGramDetFloor)) {
    throw DegenerateBasisError("gram_decompose: basis is linearly dependent (|det G| = " +
                               std::to_string(det) + ")");
  }
  const StateVector coeffs = lu.solve(rhs);

  StateVector synth = StateVector::Zero(state.size());
  for (Eigen::Index i = 0; i < m; ++i) {
    synth += coeffs(i) * basis[static_cast<std::size_t>(i)];
  }

  GramDecomposition out;
  out.coefficients.assign(coeffs.data(), coeffs.data() + m);
  out.residual = (state - synth).norm();
  return out;
}

DenseMatrix random_unitary(Eigen::Index dim, std::uint64_t seed) {
  if (dim < 1) {
    throw std::invalid_argument("random_unitary: dimension must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  DenseMatrix w(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      w(i, j) = Complex(re, im);
    }
  }

  // Modified Gram-Schmidt, run twice per column to keep orthogonality at
  // roundoff level.
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index k = 0; k < j; ++k) {
        const Complex proj = w.col(k).dot(w.col(j));
        w.col(j) -= proj * w.col(k);
      }
    }
    const double n = w.col(j).norm();
    if (n == 0.0) {
      throw std::runtime_error("random_unitary: rank-deficient draw");
    }
    w.col(j) /= n;
  }
  return w;
}

StateVector apply(const DenseMatrix& w, const StateVector& v) {
  if (w.cols() != v.size()) {
    throw std::invalid_argument("apply: dimension mismatch");
  }
  return w * v;
}

DenseMatrix compose(const DenseMatrix& w1, const DenseMatrix& w2) {
  if (w1.cols() != w2.rows()) {
    throw std::invalid_argument("compose: dimension mismatch");
  }
  return w1 * w2;
}

StateVector basis_state(Eigen::Index dim, Eigen::Index index) {
  if (index < 0 || index >= dim) {
    throw std::out_of_range("basis_state: index " + std::to_string(index) +
                            " outside [0, " + std::to_string(dim) + ")");
  }
  StateVector e = StateVector::Zero(dim);
  e(index) = 1.0;
  return e;
}

}  // namespace phasematch
