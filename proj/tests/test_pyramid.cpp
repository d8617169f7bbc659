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

#include "phasematch/engine2d.hpp"

#include <map>
#include <tuple>
#include <vector>

using namespace phasematch;

namespace {

// Polynomial in (alpha, delta, x = beta*lambda) with integer coefficients.
using Monomial = std::tuple<int, int, int>;
using Poly = std::map<Monomial, std::int64_t>;

Poly times(const Poly& p, int da, int dd, int dx) {
  Poly out;
  for (const auto& [m, c] : p) {
    const auto [a, d, x] = m;
    out[{a + da, d + dd, x + dx}] += c;
  }
  return out;
}

Poly plus(Poly p, const Poly& q) {
  for (const auto& [m, c] : q) p[m] += c;
  return p;
}

std::int64_t coeff(const Poly& p, Monomial m) {
  const auto it = p.find(m);
  return it == p.end() ? 0 : it->second;
}

// Expands a' = alpha a + x B, B' = a + delta B with b = beta B.
struct Expansion {
  std::vector<Poly> a;
  std::vector<Poly> b;
};

Expansion expand(int k_max) {
  Expansion e;
  e.a.push_back(Poly{{{0, 0, 0}, 1}});
  e.b.push_back(Poly{});
  for (int k = 0; k < k_max; ++k) {
    e.a.push_back(plus(times(e.a[k], 1, 0, 0), times(e.b[k], 0, 0, 1)));
    e.b.push_back(plus(e.a[k], times(e.b[k], 0, 1, 0)));
  }
  return e;
}

void check_row(int k, int j, const std::vector<std::int64_t>& expected) {
  CAPTURE(k);
  CAPTURE(j);
  REQUIRE(static_cast<int>(expected.size()) == k - 2 * j);
  for (int i = 0; i < static_cast<int>(expected.size()); ++i) {
    CAPTURE(i);
    CHECK(l_coeff(k, i, j) == expected[i]);
  }
}

}  // namespace

TEST_CASE("first pyramid") {
  check_row(3, 1, {1});
  check_row(4, 1, {2, 2});
  check_row(5, 1, {3, 4, 3});
  check_row(6, 1, {4, 6, 6, 4});
  check_row(7, 1, {5, 8, 9, 8, 5});
}

TEST_CASE("second pyramid") {
  check_row(5, 2, {1});
  check_row(6, 2, {3, 3});
  check_row(7, 2, {6, 9, 6});
  check_row(8, 2, {10, 18, 18, 10});
}

TEST_CASE("third pyramid") {
  check_row(7, 3, {1});
  check_row(8, 3, {4, 4});
  check_row(9, 3, {10, 16, 10});
  check_row(10, 3, {20, 40, 40, 20});
}

TEST_CASE("a5 and a6 coefficient lists") {
  auto t_row = [](int k, int j) {
    std::vector<std::int64_t> row;
    for (int i = 0; i <= k - 2 * j; ++i) row.push_back(t_coeff(k, i, j));
    return row;
  };
  CHECK(t_row(5, 1) == std::vector<std::int64_t>{4, 3, 2, 1});
  CHECK(t_row(5, 2) == std::vector<std::int64_t>{3, 2});
  CHECK(t_row(6, 1) == std::vector<std::int64_t>{5, 4, 3, 2, 1});
  CHECK(t_row(6, 2) == std::vector<std::int64_t>{6, 6, 3});
  CHECK(t_row(6, 3) == std::vector<std::int64_t>{1});
}

TEST_CASE("diagonal pattern") {
  // Row b_{2j+1+n} starts with C(j+n, j), reading the left edge of each pyramid.
  for (int j = 1; j <= 4; ++j) {
    for (int n = 0; n <= 6; ++n) {
      CHECK(l_coeff(2 * j + 1 + n, 0, j) == binom(j + n, j));
      CHECK(l_coeff(2 * j + 1 + n, n, j) == binom(j + n, j));
    }
  }
}

TEST_CASE("coefficients match brute-force expansion") {
  const int k_max = 12;
  const auto e = expand(k_max);
  for (int k = 1; k <= k_max; ++k) {
    const auto table = coefficient_table(TwoDimCoefficients{0.3, 0.2, 0.1, 0.5}, k);
    for (int j = 0; 2 * j <= k - 1 && j <= 4; ++j) {
      for (int i = 0; i <= k - 1 - 2 * j; ++i) {
        const auto expect = coeff(e.b[k], {k - 1 - 2 * j - i, i, j});
        CHECK(l_coeff(k, i, j) == expect);
        CHECK(table.l[j][i] == expect);
      }
    }
    for (int j = 1; 2 * j <= k && j <= 4; ++j) {
      for (int i = 0; i <= k - 2 * j; ++i) {
        const auto expect = coeff(e.a[k], {k - 2 * j - i, i, j});
        CHECK(t_coeff(k, i, j) == expect);
        CHECK(table.t[j][i] == expect);
      }
    }
    // No monomials outside the closed-form support.
    for (const auto& [m, c] : e.b[k]) {
      const auto [a, d, x] = m;
      CHECK(a + d + 2 * x == k - 1);
    }
    CHECK(coeff(e.a[k], {k, 0, 0}) == 1);
  }
}

TEST_CASE("out-of-support entries vanish") {
  CHECK(l_coeff(7, 5, 1) == 0);
  CHECK(l_coeff(4, 0, 2) == 0);
  CHECK(t_coeff(5, 4, 1) == 0);
  CHECK(t_coeff(3, 0, 2) == 0);
}
