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

#include "phasematch/engine2d.hpp"

#include "phasematch/phase_operators.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace phasematch {

namespace {

constexpr double kDegenerateSine = 1e-12;

std::vector<Complex> powers(Complex z, int n) {
  std::vector<Complex> out(static_cast<std::size_t>(std::max(n, 0)) + 1);
  out[0] = 1.0;
  for (int i = 1; i <= n; ++i) out[i] = out[i - 1] * z;
  return out;
}

void check_exact_range(int k, int k_exact_max, const char* what) {
  if (k < 0) {
    throw std::invalid_argument(std::string(what) + ": k must be >= 0");
  }
  if (k > k_exact_max) {
    throw ConditioningError(std::string(what) + ": k = " + std::to_string(k) +
                            " exceeds the closed-form limit " +
                            std::to_string(k_exact_max) +
                            "; use iterate2 for larger k");
  }
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kPresent: return "present";
    case Provenance::kGrover: return "grover";
    case Provenance::kLong: return "long";
    case Provenance::kHoyer: return "hoyer";
    case Provenance::kCustom: return "custom";
  }
  return "custom";
}

FirstOrderPhases first_order_phases(const AlgorithmParams& params) {
  return {unit_phase(2.0 * params.theta), unit_phase(2.0 * params.phi)};
}

TwoDimCoefficients present_coeffs(const AlgorithmParams& params) {
  const Complex a = rotation_factor(params.theta);
  const Complex b = rotation_factor(params.phi);
  const double u2 = std::norm(params.u);
  return {
      -(1.0 - a + a * b * u2),
      b * params.u,
      a * (1.0 - b) * std::conj(params.u),
      b - 1.0,
      Provenance::kPresent,
  };
}

TwoDimCoefficients grover_coeffs(Complex u) {
  return {1.0 - 4.0 * std::norm(u), 2.0 * u, -2.0 * std::conj(u), 1.0,
          Provenance::kGrover};
}

TwoDimCoefficients long_coeffs(double theta, double phi, Complex u) {
  const Complex et = unit_phase(theta);
  const Complex ep = unit_phase(phi);
  return {
      -et - (1.0 - et) * (1.0 - ep) * std::norm(u),
      (1.0 - ep) * u,
      (1.0 - et) * ep * std::conj(u),
      -ep,
      Provenance::kLong,
  };
}

TwoDimCoefficients hoyer_coeffs(const HoyerParams& h) {
  if (!(h.a >= 0.0 && h.a <= 1.0)) {
    throw std::invalid_argument("hoyer_coeffs: a must lie in [0, 1]");
  }
  const Complex g = 1.0 - unit_phase(h.phi);
  const Complex ev = unit_phase(h.varphi);
  const double s = std::sqrt(h.a) * std::sqrt(1.0 - h.a);
  return {
      -(g * h.a + unit_phase(h.phi)),
      g * s * ev,
      g * s,
      (g * h.a - 1.0) * ev,
      Provenance::kHoyer,
  };
}

AmplitudeTrajectory iterate2(const TwoDimCoefficients& c, int k_max) {
  if (k_max < 0) throw std::invalid_argument("iterate2: k_max must be >= 0");
  AmplitudeTrajectory out;
  out.steps.reserve(static_cast<std::size_t>(k_max) + 1);
  Complex a = 1.0;
  Complex b = 0.0;
  out.steps.push_back({0, a, b});
  for (int k = 1; k <= k_max; ++k) {
    const Complex next_a = c.alpha * a + c.lambda * b;
    const Complex next_b = c.beta * a + c.delta * b;
    a = next_a;
    b = next_b;
    out.steps.push_back({k, a, b});
  }
  return out;
}

// Wide enough that acc * (n - r + i) cannot wrap before the overflow check.
__extension__ using WideUnsigned = unsigned __int128;

std::int64_t binom(int n, int r) {
  if (n < 0 || r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  WideUnsigned acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > static_cast<WideUnsigned>(std::numeric_limits<std::int64_t>::max())) {
      throw std::overflow_error("binom: C(" + std::to_string(n) + ", " +
                                std::to_string(r) + ") overflows int64");
    }
  }
  return static_cast<std::int64_t>(acc);
}

std::int64_t l_coeff(int k, int i, int j) {
  return binom(i + j, j) * binom(k - i - j - 1, j);
}

std::int64_t t_coeff(int k, int i, int j) {
  return binom(i + j - 1, j - 1) * binom(k - i - j, j);
}

CoefficientTable coefficient_table(const TwoDimCoefficients& c, int k) {
  check_exact_range(k, kExactMaxK, "coefficient_table");
  const auto pa = powers(c.alpha, k);
  const auto pd = powers(c.delta, k);

  CoefficientTable table;
  table.k = k;

  if (k >= 1) {
    const int jmax = (k - 1) / 2;
    for (int j = 0; j <= jmax; ++j) {
      const int deg = k - 1 - 2 * j;
      std::vector<std::int64_t> weights(static_cast<std::size_t>(deg) + 1);
      Complex sum = 0.0;
      for (int i = 0; i <= deg; ++i) {
        weights[i] = l_coeff(k, i, j);
        sum += static_cast<double>(weights[i]) * pa[deg - i] * pd[i];
      }
      table.l.push_back(std::move(weights));
      table.c.push_back(sum);
    }
  }

  table.d.push_back(pa[k]);
  table.t.emplace_back();
  for (int j = 1; j <= k / 2; ++j) {
    const int deg = k - 2 * j;
    std::vector<std::int64_t> weights(static_cast<std::size_t>(deg) + 1);
    Complex sum = 0.0;
    for (int i = 0; i <= deg; ++i) {
      weights[i] = t_coeff(k, i, j);
      sum += static_cast<double>(weights[i]) * pa[deg - i] * pd[i];
    }
    table.t.push_back(std::move(weights));
    table.d.push_back(sum);
  }
  return table;
}

Complex exact_b(const TwoDimCoefficients& c, int k, int k_exact_max) {
  check_exact_range(k, k_exact_max, "exact_b");
  if (k == 0) return 0.0;
  const auto table = coefficient_table(c, k);
  const Complex bl = c.beta * c.lambda;
  // Horner in (beta lambda).
  Complex acc = 0.0;
  for (auto it = table.c.rbegin(); it != table.c.rend(); ++it) acc = acc * bl + *it;
  return c.beta * acc;
}

Complex exact_a(const TwoDimCoefficients& c, int k, int k_exact_max) {
  check_exact_range(k, k_exact_max, "exact_a");
  const auto table = coefficient_table(c, k);
  const Complex bl = c.beta * c.lambda;
  Complex acc = 0.0;
  for (auto it = table.d.rbegin(); it != table.d.rend(); ++it) acc = acc * bl + *it;
  return acc;
}

Complex approx_b(const AlgorithmParams& params, int k) {
  if (k < 1) throw std::invalid_argument("approx_b: k must be >= 1");
  const auto [sigma, delta1] = first_order_phases(params);
  const Complex beta = present_coeffs(params).beta;
  const auto ps = powers(sigma, k - 1);
  const auto pd = powers(delta1, k - 1);
  Complex sum = 0.0;
  for (int i = 0; i < k; ++i) sum += ps[k - 1 - i] * pd[i];
  return beta * sum;
}

double closed_form_magnitude(const AlgorithmParams& params, int k) {
  if (k < 1) throw std::invalid_argument("closed_form_magnitude: k must be >= 1");
  const double scale = 2.0 * std::abs(exact_cos(params.phi)) * std::abs(params.u);
  const double diff = params.theta - params.phi;
  const double s = std::sin(diff);
  if (std::abs(s) < kDegenerateSine) return scale * k;
  return scale * std::abs(std::sin(k * diff) / s);
}

SweepResult sweep_max(const TwoDimCoefficients& c, int k_max) {
  if (k_max < 1) throw std::invalid_argument("sweep_max: k_max must be >= 1");
  SweepResult out;
  out.trajectory = iterate2(c, k_max);
  out.k_star = 1;
  out.max_abs_b = std::abs(out.trajectory.steps[1].b);
  for (int k = 2; k <= k_max; ++k) {
    const double v = std::abs(out.trajectory.steps[k].b);
    if (v > out.max_abs_b) {
      out.max_abs_b = v;
      out.k_star = k;
    }
  }
  return out;
}

SweepResult sweep_max(const AlgorithmParams& params, int k_max) {
  auto out = sweep_max(present_coeffs(params), k_max);
  out.condition = phase_condition(params);
  return out;
}

PhaseCondition phase_condition(const AlgorithmParams& params) {
  PhaseCondition pc;
  pc.threshold = 2.0 * std::abs(exact_cos(params.phi)) * std::abs(params.u);
  const double gap = std::abs(params.theta - params.phi);
  pc.ratio_l = pc.threshold > 0.0 ? gap / pc.threshold
                                  : std::numeric_limits<double>::infinity();
  pc.satisfied = pc.ratio_l < 1.0;
  return pc;
}

}  // namespace phasematch
