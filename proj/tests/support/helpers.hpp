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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace phasematch::testing {

inline constexpr double kPi = std::numbers::pi;

/// Uniform draw from the closed disk of the given radius.
inline Complex random_in_disk(std::mt19937_64& rng, double radius = 1.0) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius * std::sqrt(unit(rng));
  const double t = 2.0 * kPi * unit(rng);
  return std::polar(r, t);
}

inline double random_angle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> a(-kPi, kPi);
  return a(rng);
}

inline bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace phasematch::testing
