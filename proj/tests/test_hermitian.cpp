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

#include "doctest.h"

#include "phasematch/hermitian.hpp"
#include "support/helpers.hpp"

using namespace phasematch;

namespace {

DenseMatrix diag(std::initializer_list<Complex> entries) {
  DenseMatrix m = DenseMatrix::Zero(static_cast<Eigen::Index>(entries.size()),
                                    static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (Complex e : entries) {
    m(i, i) = e;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("pair_swap") {
  DenseMatrix p2(2, 2);
  p2 << 0, 1, 1, 0;
  CHECK(pair_swap(2) == p2);

  DenseMatrix p4 = DenseMatrix::Zero(4, 4);
  p4(0, 1) = p4(1, 0) = p4(2, 3) = p4(3, 2) = 1.0;
  CHECK(pair_swap(4) == p4);

  for (Eigen::Index n : {2, 6, 10, 32}) {
    const DenseMatrix p = pair_swap(n);
    CHECK(p * p == DenseMatrix::Identity(n, n));
    CHECK(p == p.adjoint());
    for (Eigen::Index i = 0; i < n; ++i) CHECK(p(i, i) == Complex(0.0));
  }
  CHECK_THROWS_AS(pair_swap(3), std::invalid_argument);
  CHECK_THROWS_AS(pair_swap(0), std::invalid_argument);
}

TEST_CASE("is_block_symmetric") {
  CHECK(is_block_symmetric(DenseMatrix::Identity(4, 4)));
  CHECK(is_block_symmetric(pair_swap(6)));
  CHECK_FALSE(is_block_symmetric(diag({1.0, std::polar(1.0, phasematch::testing::kPi / 3)})));
  CHECK_THROWS_AS(is_block_symmetric(DenseMatrix::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("block and conjugation tests agree") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Eigen::Index n = 2 + 2 * static_cast<Eigen::Index>(seed % 5);
    const DenseMatrix sym = random_commuting_unitary(n, seed);
    const DenseMatrix gen = random_unitary(n, seed + 1000);
    for (const DenseMatrix* m : {&sym, &gen}) {
      const auto b = block_symmetry(*m);
      CHECK(b.by_blocks == b.by_conjugation);
    }
    CHECK(block_symmetry(sym).by_blocks);
    CHECK_FALSE(block_symmetry(gen).by_blocks);
  }
}

TEST_CASE("random_commuting_unitary") {
  const DenseMatrix v = random_commuting_unitary(4, 7);
  CHECK(is_block_symmetric(v));
  CHECK(is_unitary(v, 1e-10));
  CHECK(max_abs_diff(v, random_commuting_unitary(4, 7)) == 0.0);
  CHECK(max_abs_diff(v, random_commuting_unitary(4, 8)) > 1e-3);
  CHECK(max_abs_diff(commuting_unitary_from_blocks(DenseMatrix::Identity(3, 3),
                                                   DenseMatrix::Identity(3, 3)),
                     DenseMatrix::Identity(6, 6)) <= 1e-15);
  CHECK_THROWS_AS(random_commuting_unitary(5, 1), std::invalid_argument);
}

TEST_CASE("companion") {
  SUBCASE("V = I") {
    const auto pair = companion(DenseMatrix::Identity(4, 4));
    CHECK(pair.u == pair_swap(4));
    CHECK(pair.v * pair.u == pair_swap(4));
  }
  SUBCASE("V = P") {
    const auto pair = companion(pair_swap(4));
    CHECK(pair.u == DenseMatrix::Identity(4, 4));
    CHECK(pair.v * pair.u == pair_swap(4));
  }
  SUBCASE("seeded pair") {
    const auto pair = companion(random_commuting_unitary(8, 3));
    const DenseMatrix vu = pair.v * pair.u;
    for (Eigen::Index i = 0; i < 8; ++i) CHECK(std::abs(vu(i, i)) <= 1e-12);
  }
  CHECK_THROWS_AS(companion(random_unitary(4, 9)), std::invalid_argument);
  CHECK_THROWS_AS(companion(2.0 * DenseMatrix::Identity(4, 4)), std::invalid_argument);
}

TEST_CASE("companion products are hermitian involutions with zero diagonal") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Eigen::Index n = 2 * (1 + static_cast<Eigen::Index>(seed % 8));
    const auto pair = companion(random_commuting_unitary(n, seed));
    CHECK(pair.dim == n);
    for (const DenseMatrix& w : {DenseMatrix(pair.v * pair.u), DenseMatrix(pair.u * pair.v)}) {
      CHECK(is_unitary(w, 1e-10));
      CHECK(is_hermitian(w, 1e-10));
      CHECK(max_abs_diff(w * w, DenseMatrix::Identity(n, n)) <= 1e-10);
      CHECK(max_abs_diff(w, pair_swap(n)) <= 1e-10);
      for (Eigen::Index i = 0; i < n; ++i) CHECK(std::abs(w(i, i)) <= 1e-10);
    }
  }
}

TEST_CASE("hermitian_iff_involution") {
  const auto a = hermitian_iff_involution(diag({1.0, -1.0}));
  CHECK(a.hermitian);
  CHECK(a.involution);
  const auto b = hermitian_iff_involution(diag({Complex(0.0, 1.0), 1.0}));
  CHECK_FALSE(b.hermitian);
  CHECK_FALSE(b.involution);
  CHECK_THROWS_AS(hermitian_iff_involution(2.0 * DenseMatrix::Identity(2, 2)),
                  std::invalid_argument);
}

TEST_CASE("hermitian iff involution over seeded unitaries") {
  std::mt19937_64 rng(500);
  int hermitian_count = 0;
  for (std::uint64_t t = 0; t < 500; ++t) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(t % 7);
    DenseMatrix w;
    if (t % 2 == 0) {
      // Q diag(+-1) Q^+ is a hermitian involution.
      const DenseMatrix q = random_unitary(n, t);
      DenseMatrix s = DenseMatrix::Zero(n, n);
      for (Eigen::Index i = 0; i < n; ++i) s(i, i) = (rng() & 1U) ? 1.0 : -1.0;
      w = q * s * q.adjoint();
    } else {
      w = random_unitary(n, t);
    }
    const auto f = hermitian_iff_involution(w, 1e-9);
    CHECK(f.hermitian == f.involution);
    hermitian_count += f.hermitian ? 1 : 0;
  }
  CHECK(hermitian_count == 250);
}

TEST_CASE("grover pair V = U^+ gives the identity") {
  const DenseMatrix u = random_unitary(6, 12);
  const DenseMatrix vu = u.adjoint() * u;
  CHECK(max_abs_diff(vu, DenseMatrix::Identity(6, 6)) <= 1e-12);
  CHECK(hermitian_iff_involution(vu).hermitian);
}
