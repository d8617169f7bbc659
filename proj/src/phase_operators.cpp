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

#include "phasematch/phase_operators.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace phasematch {

namespace {

constexpr double kIdentityTol = 1e-12;

}  // namespace

Complex unit_phase(double angle) {
  constexpr double kQuarter = std::numbers::pi / 2.0;
  const double r = std::remainder(angle, kQuarter);
  const double snap = 8.0 * std::numeric_limits<double>::epsilon() *
                      std::max(1.0, std::abs(angle));
  if (std::abs(r) <= snap) {
    const auto q = static_cast<long long>(std::llround((angle - r) / kQuarter));
    switch (((q % 4) + 4) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return {std::cos(angle), std::sin(angle)};
}

double exact_cos(double angle) { return unit_phase(angle).real(); }

Complex rotation_factor(double angle) {
  return 2.0 * exact_cos(angle) * unit_phase(angle);
}

Complex diagonal_entry(RotationFamily family, double angle) {
  switch (family) {
    case RotationFamily::kLong:
      return 1.0 - (1.0 - unit_phase(angle));
    case RotationFamily::kUnitary:
      return 1.0 - rotation_factor(angle);
    case RotationFamily::kInversion:
      return -1.0;
  }
  throw std::invalid_argument("diagonal_entry: unknown rotation family");
}

DenseMatrix build(const SelectiveRotation& rotation, Eigen::Index dim) {
  if (rotation.target_index < 0 || rotation.target_index >= dim) {
    throw std::out_of_range("build: target index " +
                            std::to_string(rotation.target_index) +
                            " outside [0, " + std::to_string(dim) + ")");
  }
  DenseMatrix m = DenseMatrix::Identity(dim, dim);
  m(rotation.target_index, rotation.target_index) =
      diagonal_entry(rotation.family, rotation.angle);
  return m;
}

bool verify_family_identities(double angle, Eigen::Index dim, Eigen::Index x) {
  constexpr double pi = std::numbers::pi;
  auto long_rot = [&](double t) {
    return build({x, t, RotationFamily::kLong}, dim);
  };
  const DenseMatrix inv = build({x, pi, RotationFamily::kInversion}, dim);
  const DenseMatrix rot = long_rot(angle);
  const DenseMatrix shifted = long_rot(pi + angle);
  const DenseMatrix unitary = build({x, angle, RotationFamily::kUnitary}, dim);

  DenseMatrix half_form = DenseMatrix::Identity(dim, dim);
  half_form(x, x) -= 2.0 * std::cos(angle / 2.0) * unit_phase(angle / 2.0);

  return max_abs_diff(shifted, inv * rot) <= kIdentityTol &&
         max_abs_diff(shifted, half_form) <= kIdentityTol &&
         max_abs_diff(unitary, shifted * rot) <= kIdentityTol &&
         max_abs_diff(unitary, inv * rot * rot) <= kIdentityTol;
}

}  // namespace phasematch
