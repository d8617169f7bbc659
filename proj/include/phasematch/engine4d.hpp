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

// Amplitude engine for Q = -I_gamma V I_tau U over the four states
//   |gamma>, (VU)|gamma>, V|tau>, U^{-1}|tau>.
//
// The invariance of that span requires VU to be hermitian. The engine works
// from scalars only and cannot check this; the oracle module validates the
// premise on explicit matrices.

#include "phasematch/linalg.hpp"

#include <array>
#include <vector>

namespace phasematch {

struct FourDimInputs {
  double theta = 0.0;
  double phi = 0.0;
  Complex u;      ///< U_tau,gamma
  Complex v;      ///< V_gamma,tau
  Complex vu_gg;  ///< (VU)_gamma,gamma
  Complex uv_tt;  ///< (UV)_tau,tau
};

/// Inputs with V_gamma,tau = conj(u) and zero (VU), (UV) diagonals, as used
/// by the first-order analysis.
FourDimInputs idealized_inputs(double theta, double phi, Complex u);

struct FourDimCoefficients {
  std::array<Complex, 4> l;
  std::array<Complex, 4> p;
  /// Row r gives Q applied to basis state r:
  ///   (l1, -1, p1,  0)
  ///   (l2,  0, p2,  0)
  ///   (l3,  0, p3, -1)
  ///   (l4,  0, p4,  0)
  Eigen::Matrix4cd m;
};

struct FourAmplitudeStep {
  int k = 0;
  Complex a, b, c, d;
};

struct FourAmplitudes {
  std::vector<FourAmplitudeStep> steps;
};

struct FirstOrderFour {
  Complex a_k;     ///< first-order a_k
  Complex c_next;  ///< first-order c_{k+1}
};

FourDimCoefficients four_dim_coeffs(const FourDimInputs& inp);

/// a_{k+1} = l.(a,b,c,d), b_{k+1} = -a_k, c_{k+1} = p.(a,b,c,d),
/// d_{k+1} = -c_k, starting from (1, 0, 0, 0).
FourAmplitudes iterate4(const FourDimCoefficients& c, int k_max);

FirstOrderFour approx4(double theta, double phi, Complex u, int k);

/// |theta - phi| < 2|cos phi||u|
bool case2_tolerance(double theta, double phi, Complex u);

}  // namespace phasematch
