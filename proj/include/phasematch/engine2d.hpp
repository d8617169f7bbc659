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

// Amplitude engine for Q = -I_gamma U^{-1} I_tau U restricted to the plane
// spanned by |gamma> and U^{-1}|tau>.
//
// Q|gamma>          = alpha |gamma> + beta   U^{-1}|tau>
// Q(U^{-1}|tau>)    = lambda|gamma> + delta  U^{-1}|tau>
//
// and Q^k|gamma> = a_k |gamma> + b_k U^{-1}|tau>. The basis is not
// orthogonal (<gamma|U^{-1}|tau> = conj(u)), so |b_k| is reported raw and
// can exceed 1 slightly.

#include "phasematch/linalg.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace phasematch {

/// One search instance: rotation angles of |gamma> and |tau> (radians) and
/// the matrix element u = <tau|U|gamma>.
struct AlgorithmParams {
  double theta = 0.0;
  double phi = 0.0;
  Complex u{0.0, 0.0};
};

enum class Provenance { kPresent, kGrover, kLong, kHoyer, kCustom };

std::string_view to_string(Provenance p);

struct TwoDimCoefficients {
  Complex alpha;
  Complex beta;
  Complex lambda;
  Complex delta;
  Provenance provenance = Provenance::kCustom;
};

struct HoyerParams {
  double a = 0.0;
  double phi = 0.0;
  double varphi = 0.0;
};

/// First-order phases sigma = e^{2i theta}, delta1 = e^{2i phi}. Kept apart
/// from TwoDimCoefficients::delta even though they coincide numerically.
struct FirstOrderPhases {
  Complex sigma;
  Complex delta1;
};

FirstOrderPhases first_order_phases(const AlgorithmParams& params);

struct AmplitudeStep {
  int k = 0;
  Complex a;
  Complex b;
};

struct AmplitudeTrajectory {
  std::vector<AmplitudeStep> steps;
};

struct PhaseCondition {
  double threshold = 0.0;  ///< 2|cos phi||u|
  double ratio_l = 0.0;    ///< |theta - phi| / threshold, +inf if threshold is 0
  bool satisfied = false;  ///< ratio_l < 1
};

struct SweepResult {
  int k_star = 1;
  double max_abs_b = 0.0;
  AmplitudeTrajectory trajectory;
  /// Present only when the sweep was started from AlgorithmParams.
  std::optional<PhaseCondition> condition;
};

/// Coefficients a_k = alpha^k + sum_j d_kj (beta lambda)^j and
/// b_k = beta sum_j c_kj (beta lambda)^j, together with the integer
/// weights that build them.
struct CoefficientTable {
  int k = 0;
  std::vector<Complex> c;  ///< c_kj, j = 0..floor((k-1)/2)
  std::vector<Complex> d;  ///< d_kj, j = 0..floor(k/2); d_k0 = alpha^k
  /// l[j][i] = l_ki^(j), i = 0..k-1-2j
  std::vector<std::vector<std::int64_t>> l;
  /// t[j][i] = t_ki^(j), i = 0..k-2j (t[0] is empty)
  std::vector<std::vector<std::int64_t>> t;
};

/// Raised by the closed-form evaluators beyond kExactMaxK.
class ConditioningError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr int kExactMaxK = 64;

TwoDimCoefficients present_coeffs(const AlgorithmParams& params);
TwoDimCoefficients grover_coeffs(Complex u);
TwoDimCoefficients long_coeffs(double theta, double phi, Complex u);
TwoDimCoefficients hoyer_coeffs(const HoyerParams& h);

/// Runs a_{k+1} = alpha a_k + lambda b_k, b_{k+1} = beta a_k + delta b_k
/// from (1, 0); the result holds k_max + 1 steps.
AmplitudeTrajectory iterate2(const TwoDimCoefficients& c, int k_max);

/// Binomial coefficient, 0 outside 0 <= r <= n. Throws std::overflow_error
/// if the value does not fit in int64.
std::int64_t binom(int n, int r);

/// l_ki^(j) = C(i+j, j) C(k-i-j-1, j)
std::int64_t l_coeff(int k, int i, int j);
/// t_ki^(j) = C(i+j-1, j-1) C(k-i-j, j)
std::int64_t t_coeff(int k, int i, int j);

/// Builds the polynomial coefficients for step k (0 <= k <= kExactMaxK).
CoefficientTable coefficient_table(const TwoDimCoefficients& c, int k);

/// Closed-form b_k as a polynomial in beta*lambda.
Complex exact_b(const TwoDimCoefficients& c, int k, int k_exact_max = kExactMaxK);
/// Closed-form a_k as a polynomial in beta*lambda.
Complex exact_a(const TwoDimCoefficients& c, int k, int k_exact_max = kExactMaxK);

/// beta * sum_{i<k} sigma^{k-1-i} delta1^i, the first-order amplitude.
Complex approx_b(const AlgorithmParams& params, int k);

/// 2|cos phi||u| |sin k(theta-phi) / sin(theta-phi)|, with the theta = phi
/// limit 2k|cos phi||u| substituted when |sin(theta-phi)| < 1e-12.
double closed_form_magnitude(const AlgorithmParams& params, int k);

/// Smallest argmax of |b_k| over 1 <= k <= k_max.
SweepResult sweep_max(const TwoDimCoefficients& c, int k_max);
SweepResult sweep_max(const AlgorithmParams& params, int k_max);

PhaseCondition phase_condition(const AlgorithmParams& params);

}  // namespace phasematch
