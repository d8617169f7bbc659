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

#include "phasematch/engine4d.hpp"

#include "phasematch/phase_operators.hpp"

#include <cmath>
#include <stdexcept>

namespace phasematch {

FourDimInputs idealized_inputs(double theta, double phi, Complex u) {
  return {theta, phi, u, std::conj(u), 0.0, 0.0};
}

FourDimCoefficients four_dim_coeffs(const FourDimInputs& inp) {
  const Complex a = rotation_factor(inp.theta);
  const Complex b = rotation_factor(inp.phi);

  FourDimCoefficients out;
  out.l = {
      a * (inp.vu_gg - b * inp.u * inp.v),
      -1.0 + a - a * b * std::norm(inp.v),
      a * (std::conj(inp.u) - b * inp.v * inp.uv_tt),
      a * (1.0 - b) * inp.v,
  };
  out.p = {
      b * inp.u,
      b * std::conj(inp.v),
      b * inp.uv_tt,
      b - 1.0,
  };
  out.m << out.l[0], -1.0, out.p[0], 0.0,
           out.l[1],  0.0, out.p[1], 0.0,
           out.l[2],  0.0, out.p[2], -1.0,
           out.l[3],  0.0, out.p[3], 0.0;
  return out;
}

FourAmplitudes iterate4(const FourDimCoefficients& c, int k_max) {
  if (k_max < 0) throw std::invalid_argument("iterate4: k_max must be >= 0");
  FourAmplitudes out;
  out.steps.reserve(static_cast<std::size_t>(k_max) + 1);
  FourAmplitudeStep s{0, 1.0, 0.0, 0.0, 0.0};
  out.steps.push_back(s);
  for (int k = 1; k <= k_max; ++k) {
    FourAmplitudeStep n;
    n.k = k;
    n.a = c.l[0] * s.a + c.l[1] * s.b + c.l[2] * s.c + c.l[3] * s.d;
    n.b = -s.a;
    n.c = c.p[0] * s.a + c.p[1] * s.b + c.p[2] * s.c + c.p[3] * s.d;
    n.d = -s.c;
    s = n;
    out.steps.push_back(s);
  }
  return out;
}

FirstOrderFour approx4(double theta, double phi, Complex u, int k) {
  if (k < 1) throw std::invalid_argument("approx4: k must be >= 1");
  const int m = k / 2;
  const bool even = k % 2 == 0;
  const Complex sigma = unit_phase(2.0 * theta);
  const Complex delta1 = unit_phase(2.0 * phi);

  std::vector<Complex> ps(static_cast<std::size_t>(m) + 1, 1.0);
  std::vector<Complex> pd(static_cast<std::size_t>(m) + 1, 1.0);
  for (int i = 1; i <= m; ++i) {
    ps[i] = ps[i - 1] * sigma;
    pd[i] = pd[i - 1] * delta1;
  }
  Complex sum = 0.0;
  for (int l = 0; l <= m; ++l) sum += ps[m - l] * pd[l];

  const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
  FirstOrderFour out;
  out.a_k = even ? sign_m * unit_phase(2.0 * m * theta) : Complex(0.0);
  const double sign_c = even ? sign_m : -sign_m;
  out.c_next = sign_c * rotation_factor(phi) * u * sum;
  return out;
}

bool case2_tolerance(double theta, double phi, Complex u) {
  return std::abs(theta - phi) < 2.0 * std::abs(exact_cos(phi)) * std::abs(u);
}

}  // namespace phasematch
