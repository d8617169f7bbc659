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

// Report-producing commands behind the `phasematch` CLI.

#include "phasematch/engine2d.hpp"
#include "phasematch/report.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace phasematch {

struct CommandOptions {
  std::uint64_t seed = 1;
  double structural_tol = kStructuralTol;
  double equivalence_tol = kEquivalenceTol;
};

/// Tolerance on |b_k| for the fixed Grover table.
inline constexpr double kTable1Tol = 5e-4;
/// Tolerance on |b_k| for the theta-offset table.
inline constexpr double kTable2Tol = 2e-3;

Report run_table1(const CommandOptions& opts = {});
Report run_table2(int k_max = 100, const CommandOptions& opts = {});

/// l_ki^(j) for j >= 1, 2j+1 <= k <= max_k, and t_ki^(j) for j >= 1,
/// 2j <= k <= max_k.
Report run_pyramid(int max_k, const CommandOptions& opts = {});

struct AngleRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
};

/// Parses "A:B:STEP" (or a single value "A"). Throws std::invalid_argument.
AngleRange parse_range(std::string_view text);

Report run_sweep(const AngleRange& theta, double phi, Complex u, int k_max,
                 const CommandOptions& opts = {});

enum class VerifyScope { kTwoDim, kFourDim, kAll };

VerifyScope parse_scope(std::string_view text);

/// Oracle-vs-engine equivalence cases. Sets report.pass.
Report run_verify(VerifyScope scope, int n_cases, const CommandOptions& opts = {});

struct CoeffsRequest {
  Provenance family = Provenance::kPresent;
  double theta = 0.0;
  double phi = 0.0;
  Complex u{0.1, 0.0};
  HoyerParams hoyer;
};

Provenance parse_family(std::string_view text);

Report run_coeffs(const CoeffsRequest& req, const CommandOptions& opts = {});

/// Builds a seeded block-symmetric V with U = V^+ P and reports the pair's
/// structural checks. The matrices are attached for JSON output.
Report run_construct(Eigen::Index dim, const CommandOptions& opts = {});

/// Deterministic 64-bit seed for (seed, stream, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

}  // namespace phasematch
