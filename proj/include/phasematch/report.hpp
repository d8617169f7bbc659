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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace phasematch {

using Cell = std::variant<std::int64_t, double, std::string, bool>;

struct NamedMatrix {
  std::string name;
  DenseMatrix value;
};

/// Tabular command output. CSV carries only the header and rows; JSON also
/// carries metadata, the pass flag, and any attached matrices.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, Cell>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::optional<bool> pass;
  std::vector<NamedMatrix> matrices;

  void add_row(std::vector<Cell> row);
};

/// Doubles are rendered with 12 significant digits in both encodings.
std::string format_number(double x);

std::string to_csv(const Report& report);
std::string to_json(const Report& report);

}  // namespace phasematch
