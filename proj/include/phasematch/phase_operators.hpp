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

namespace phasematch {

/// e^{i angle}. Angles within a few ulps of a multiple of pi/2 evaluate to
/// the exact values {1, i, -1, -i}, so cos(pi/2) is 0 rather than 6e-17.
Complex unit_phase(double angle);

/// cos(angle), exact at multiples of pi/2 (see unit_phase).
double exact_cos(double angle);

/// The scalar 2 cos(t) e^{it} = 1 + e^{2it} that appears in every
/// unitary selective rotation.
Complex rotation_factor(double angle);

enum class RotationFamily {
  /// I - (1 - e^{it})|x><x|: multiplies the |x> amplitude by e^{it}.
  kLong,
  /// I - 2cos(t) e^{it}|x><x|: multiplies the |x> amplitude by -e^{2it}.
  kUnitary,
  /// I - 2|x><x|.
  kInversion,
};

struct SelectiveRotation {
  Eigen::Index target_index = 0;
  double angle = 0.0;
  RotationFamily family = RotationFamily::kUnitary;
};

/// The (x, x) entry of the rotation; every other diagonal entry is 1.
Complex diagonal_entry(RotationFamily family, double angle);

/// Dense N x N matrix of the rotation. Throws std::out_of_range when the
/// target index is not in [0, dim).
DenseMatrix build(const SelectiveRotation& rotation, Eigen::Index dim);

/// Checks, entrywise within 1e-12:
///   I^(pi+t) = I^(pi) I^(t)
///   I^(pi+t) = I - 2cos(t/2) e^{it/2}|x><x|
///   I_x      = I^(pi+t) I^(t)
///   I_x      = I^(pi) (I^(t))^2
/// where I^(t) is the Long family and I_x the unitary family at angle t.
bool verify_family_identities(double angle, Eigen::Index dim, Eigen::Index x);

}  // namespace phasematch
