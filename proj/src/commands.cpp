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

#include "phasematch/commands.hpp"

#include "phasematch/engine4d.hpp"
#include "phasematch/hermitian.hpp"
#include "phasematch/oracle.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace phasematch {

namespace {

constexpr std::uint64_t kStream2d = 0x2d;
constexpr std::uint64_t kStream4d = 0x4d;
constexpr std::uint64_t kStreamConstruct = 0xc0;

void add_common_metadata(Report& r, const CommandOptions& opts) {
  r.metadata.emplace_back("seed", static_cast<std::int64_t>(opts.seed));
  r.metadata.emplace_back("tolerance", opts.equivalence_tol);
  r.metadata.emplace_back("structural_tolerance", opts.structural_tol);
  r.metadata.emplace_back("version", std::string(PHASEMATCH_VERSION));
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

double max_abs_diagonal(const DenseMatrix& m) {
  return m.diagonal().cwiseAbs().maxCoeff();
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  // splitmix64 over a mixed key.
  std::uint64_t z = seed ^ (stream * 0x9E3779B97F4A7C15ull) ^ (index * 0xBF58476D1CE4E5B9ull);
  for (int round = 0; round < 2; ++round) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z ^= z >> 31;
  }
  return z;
}

Report run_table1(const CommandOptions& opts) {
  struct Row {
    int n;
    int k;
    double reference;
  };
  static constexpr std::array<Row, 4> kRows{{
      {100, 6, 0.9375},
      {400, 12, 0.9334},
      {625, 14, 0.9010},
      {900, 17, 0.9064},
  }};

  Report r;
  r.command = "table1";
  add_common_metadata(r, opts);
  r.metadata.emplace_back("table_tolerance", kTable1Tol);
  r.columns = {"N", "sqrt_N_over_2", "u", "k", "abs_b", "reference", "deviation", "pass"};
  bool all = true;
  for (const auto& row : kRows) {
    const double u = 1.0 / std::sqrt(static_cast<double>(row.n));
    const auto traj = iterate2(present_coeffs({0.0, 0.0, u}), row.k);
    const double b = std::abs(traj.steps[row.k].b);
    const double dev = std::abs(b - row.reference);
    const bool ok = dev <= kTable1Tol;
    all = all && ok;
    r.add_row({std::int64_t{row.n}, std::sqrt(static_cast<double>(row.n)) / 2.0, u,
               std::int64_t{row.k}, b, row.reference, dev, ok});
  }
  r.pass = all;
  return r;
}

Report run_table2(int k_max, const CommandOptions& opts) {
  struct Row {
    double theta;
    int k;
    double reference;
  };
  static constexpr std::array<Row, 5> kRows{{
      {0.01, 7, 0.9899},
      {0.02, 8, 0.9994},
      {0.03, 8, 0.9930},
      {0.04, 100, 0.9861},
      {0.05, 100, 0.9525},
  }};
  if (k_max < 1) throw std::invalid_argument("table2: kmax must be >= 1");

  Report r;
  r.command = "table2";
  add_common_metadata(r, opts);
  r.metadata.emplace_back("table_tolerance", kTable2Tol);
  r.metadata.emplace_back("kmax", std::int64_t{k_max});
  r.metadata.emplace_back("phi", 0.0);
  r.metadata.emplace_back("u", 0.1);
  r.columns = {"theta", "k", "abs_b", "reference", "deviation", "pass",
               "argmax_k", "argmax_abs_b", "threshold", "ratio_l"};
  bool all = true;
  for (const auto& row : kRows) {
    const AlgorithmParams params{row.theta, 0.0, 0.1};
    const int horizon = std::max(k_max, row.k);
    const auto sweep = sweep_max(params, horizon);
    const double b = std::abs(sweep.trajectory.steps[row.k].b);
    const double dev = std::abs(b - row.reference);
    const bool ok = dev <= kTable2Tol;
    all = all && ok;
    // The argmax is restricted to k <= k_max even if a listed k lies beyond it.
    const auto capped = sweep_max(params, k_max);
    r.add_row({row.theta, std::int64_t{row.k}, b, row.reference, dev, ok,
               std::int64_t{capped.k_star}, capped.max_abs_b, sweep.condition->threshold,
               sweep.condition->ratio_l});
  }
  r.pass = all;
  return r;
}

Report run_pyramid(int max_k, const CommandOptions& opts) {
  if (max_k < 1 || max_k > kExactMaxK) {
    throw std::invalid_argument("pyramid: max-k must lie in [1, " +
                                std::to_string(kExactMaxK) + "]");
  }
  Report r;
  r.command = "pyramid";
  add_common_metadata(r, opts);
  r.metadata.emplace_back("max_k", std::int64_t{max_k});
  r.columns = {"kind", "j", "k", "i", "value"};
  for (int j = 1; 2 * j + 1 <= max_k; ++j) {
    for (int k = 2 * j + 1; k <= max_k; ++k) {
      for (int i = 0; i <= k - 1 - 2 * j; ++i) {
        r.add_row({std::string("l"), std::int64_t{j}, std::int64_t{k}, std::int64_t{i},
                   l_coeff(k, i, j)});
      }
    }
  }
  for (int j = 1; 2 * j <= max_k; ++j) {
    for (int k = 2 * j; k <= max_k; ++k) {
      for (int i = 0; i <= k - 2 * j; ++i) {
        r.add_row({std::string("t"), std::int64_t{j}, std::int64_t{k}, std::int64_t{i},
                   t_coeff(k, i, j)});
      }
    }
  }
  return r;
}

AngleRange parse_range(std::string_view text) {
  std::array<std::string_view, 3> parts{};
  std::size_t n = 0;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(':', start);
    if (n == parts.size()) throw std::invalid_argument("range has more than three fields");
    parts[n++] = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  AngleRange out;
  if (n == 1) {
    out.start = out.stop = parse_double(parts[0]);
    out.step = 1.0;
    return out;
  }
  if (n != 3) throw std::invalid_argument("range must be A or A:B:STEP");
  out.start = parse_double(parts[0]);
  out.stop = parse_double(parts[1]);
  out.step = parse_double(parts[2]);
  if (!(out.step > 0.0)) throw std::invalid_argument("range step must be positive");
  if (out.stop < out.start) throw std::invalid_argument("range end precedes its start");
  return out;
}

Report run_sweep(const AngleRange& theta, double phi, Complex u, int k_max,
                 const CommandOptions& opts) {
  if (k_max < 1) throw std::invalid_argument("sweep: kmax must be >= 1");
  if (std::abs(u) > 1.0) throw std::invalid_argument("sweep: |u| must be <= 1");
  Report r;
  r.command = "sweep";
  add_common_metadata(r, opts);
  r.metadata.emplace_back("phi", phi);
  r.metadata.emplace_back("u_re", u.real());
  r.metadata.emplace_back("u_im", u.imag());
  r.metadata.emplace_back("kmax", std::int64_t{k_max});
  r.columns = {"theta", "k_star", "max_abs_b", "threshold", "ratio_l", "satisfied",
               "first_order_at_k_star"};
  const auto count =
      static_cast<long long>(std::floor((theta.stop - theta.start) / theta.step + 1e-9)) + 1;
  // Each grid cell is evaluated from scratch, so the output does not depend on
  // evaluation order.
  for (long long i = 0; i < count; ++i) {
    const double t = theta.start + static_cast<double>(i) * theta.step;
    const AlgorithmParams params{t, phi, u};
    const auto s = sweep_max(params, k_max);
    r.add_row({t, std::int64_t{s.k_star}, s.max_abs_b, s.condition->threshold,
               s.condition->ratio_l, s.condition->satisfied,
               closed_form_magnitude(params, s.k_star)});
  }
  return r;
}

VerifyScope parse_scope(std::string_view text) {
  if (text == "2d") return VerifyScope::kTwoDim;
  if (text == "4d") return VerifyScope::kFourDim;
  if (text == "all") return VerifyScope::kAll;
  throw std::invalid_argument("unknown scope '" + std::string(text) + "'");
}

Report run_verify(VerifyScope scope, int n_cases, const CommandOptions& opts) {
  if (n_cases < 1) throw std::invalid_argument("verify: cases must be >= 1");
  constexpr std::array<Eigen::Index, 3> kDims2{4, 16, 64};
  constexpr std::array<Eigen::Index, 2> kDims4{8, 16};
  constexpr int kSteps2 = 50;
  constexpr int kSteps4 = 30;

  Report r;
  r.command = "verify";
  add_common_metadata(r, opts);
  r.metadata.emplace_back("cases", std::int64_t{n_cases});
  r.columns = {"scope", "case", "dim", "theta", "phi", "k_max", "max_deviation",
               "max_residual", "max_norm_error", "max_abs_diag_vu", "pass"};
  bool all = true;
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);

  if (scope != VerifyScope::kFourDim) {
    for (int i = 0; i < n_cases; ++i) {
      std::mt19937_64 rng(derive_seed(opts.seed, kStream2d, static_cast<std::uint64_t>(i)));
      const Eigen::Index dim = kDims2[static_cast<std::size_t>(i) % kDims2.size()];
      const double theta = angle(rng);
      const double phi = angle(rng);
      const auto cfg = make_config(random_unitary(dim, rng()), theta, phi);
      const auto chk = check_two_dim(cfg, kSteps2);
      const bool ok = chk.max_deviation <= opts.equivalence_tol &&
                      chk.max_residual <= opts.equivalence_tol &&
                      chk.max_norm_error <= opts.equivalence_tol;
      all = all && ok;
      r.add_row({std::string("2d"), std::int64_t{i}, static_cast<std::int64_t>(dim), theta, phi,
                 std::int64_t{kSteps2}, chk.max_deviation, chk.max_residual,
                 chk.max_norm_error, 0.0, ok});
    }
  }
  if (scope != VerifyScope::kTwoDim) {
    for (int i = 0; i < n_cases; ++i) {
      std::mt19937_64 rng(derive_seed(opts.seed, kStream4d, static_cast<std::uint64_t>(i)));
      const Eigen::Index dim = kDims4[static_cast<std::size_t>(i) % kDims4.size()];
      const double theta = angle(rng);
      const double phi = angle(rng);
      const auto pair = companion(random_commuting_unitary(dim, rng()), opts.structural_tol);
      const auto cfg = make_config(pair.u, theta, phi, pair.v);
      const auto chk = check_four_dim(cfg, kSteps4);
      const double diag = max_abs_diagonal(pair.v * pair.u);
      const bool ok = chk.max_deviation <= opts.equivalence_tol &&
                      chk.max_residual <= opts.equivalence_tol &&
                      chk.max_norm_error <= opts.equivalence_tol &&
                      diag <= opts.structural_tol;
      all = all && ok;
      r.add_row({std::string("4d"), std::int64_t{i}, static_cast<std::int64_t>(dim), theta, phi,
                 std::int64_t{kSteps4}, chk.max_deviation, chk.max_residual,
                 chk.max_norm_error, diag, ok});
    }
  }
  r.pass = all;
  return r;
}

Provenance parse_family(std::string_view text) {
  if (text == "present") return Provenance::kPresent;
  if (text == "grover") return Provenance::kGrover;
  if (text == "long") return Provenance::kLong;
  if (text == "hoyer") return Provenance::kHoyer;
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

Report run_coeffs(const CoeffsRequest& req, const CommandOptions& opts) {
  TwoDimCoefficients c;
  switch (req.family) {
    case Provenance::kPresent: c = present_coeffs({req.theta, req.phi, req.u}); break;
    case Provenance::kGrover: c = grover_coeffs(req.u); break;
    case Provenance::kLong: c = long_coeffs(req.theta, req.phi, req.u); break;
    case Provenance::kHoyer: c = hoyer_coeffs(req.hoyer); break;
    case Provenance::kCustom: throw std::invalid_argument("coeffs: no custom family");
  }
  Report r;
  r.command = "coeffs";
  add_common_metadata(r, opts);
  r.metadata.emplace_back("family", std::string(to_string(req.family)));
  if (req.family == Provenance::kHoyer) {
    r.metadata.emplace_back("a", req.hoyer.a);
    r.metadata.emplace_back("phi", req.hoyer.phi);
    r.metadata.emplace_back("varphi", req.hoyer.varphi);
  } else {
    r.metadata.emplace_back("theta", req.theta);
    r.metadata.emplace_back("phi", req.phi);
    r.metadata.emplace_back("u_re", req.u.real());
    r.metadata.emplace_back("u_im", req.u.imag());
  }
  r.columns = {"name", "re", "im", "abs"};
  const std::array<std::pair<const char*, Complex>, 4> named{{
      {"alpha", c.alpha}, {"beta", c.beta}, {"lambda", c.lambda}, {"delta", c.delta}}};
  for (const auto& [name, z] : named) {
    r.add_row({std::string(name), z.real(), z.imag(), std::abs(z)});
  }
  return r;
}

Report run_construct(Eigen::Index dim, const CommandOptions& opts) {
  const DenseMatrix v = random_commuting_unitary(dim, derive_seed(opts.seed, kStreamConstruct, 0));
  const auto pair = companion(v, opts.structural_tol);
  const DenseMatrix p = pair_swap(dim);
  const DenseMatrix vu = pair.v * pair.u;
  const DenseMatrix uv = pair.u * pair.v;
  const DenseMatrix id = DenseMatrix::Identity(dim, dim);
  const double tol = opts.structural_tol;

  Report r;
  r.command = "construct";
  add_common_metadata(r, opts);
  r.metadata.emplace_back("dim", static_cast<std::int64_t>(dim));
  r.columns = {"check", "value", "tolerance", "pass"};
  bool all = true;
  auto check = [&](const char* name, double value) {
    const bool ok = value <= tol;
    all = all && ok;
    r.add_row({std::string(name), value, tol, ok});
  };
  check("V_unitary", max_abs_diff(v * v.adjoint(), id));
  check("U_unitary", max_abs_diff(pair.u * pair.u.adjoint(), id));
  check("V_minus_PVP", max_abs_diff(v, p * v * p));
  check("VU_minus_P", max_abs_diff(vu, p));
  check("UV_minus_P", max_abs_diff(uv, p));
  check("VU_hermitian", max_abs_diff(vu, vu.adjoint()));
  check("VU_involution", max_abs_diff(vu * vu, id));
  check("VU_diagonal", max_abs_diagonal(vu));
  check("UV_diagonal", max_abs_diagonal(uv));
  r.pass = all;
  r.matrices.push_back({"V", pair.v});
  r.matrices.push_back({"U", pair.u});
  return r;
}

}  // namespace phasematch
