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

#include "phasematch/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace phasematch {

namespace {

using nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_number(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>) return csv_escape(v);
        else return std::to_string(v);
      },
      cell);
}

ordered_json cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return format_number(v);
          // Round-trip through the 12-digit text so JSON and CSV agree.
          return std::stod(format_number(v));
        } else {
          return v;
        }
      },
      cell);
}

}  // namespace

void Report::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("Report::add_row: expected " + std::to_string(columns.size()) +
                           " cells, got " + std::to_string(row.size()));
  }
  rows.push_back(std::move(row));
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string to_csv(const Report& report) {
  std::ostringstream os;
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    if (i) os << ',';
    os << csv_escape(report.columns[i]);
  }
  os << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << cell_text(row[i]);
    }
    os << '\n';
  }
  return os.str();
}

std::string to_json(const Report& report) {
  ordered_json doc;
  doc["command"] = report.command;
  ordered_json meta = ordered_json::object();
  for (const auto& [key, value] : report.metadata) meta[key] = cell_json(value);
  doc["metadata"] = meta;

  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json rec = ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) rec[report.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(rec));
  }
  doc["rows"] = std::move(rows);
  if (report.pass) doc["pass"] = *report.pass;

  if (!report.matrices.empty()) {
    ordered_json mats = ordered_json::object();
    for (const auto& m : report.matrices) {
      ordered_json grid = ordered_json::array();
      for (Eigen::Index i = 0; i < m.value.rows(); ++i) {
        ordered_json r = ordered_json::array();
        for (Eigen::Index j = 0; j < m.value.cols(); ++j) {
          r.push_back({cell_json(m.value(i, j).real()), cell_json(m.value(i, j).imag())});
        }
        grid.push_back(std::move(r));
      }
      mats[m.name] = std::move(grid);
    }
    doc["matrices"] = std::move(mats);
  }
  return doc.dump(2) + "\n";
}

}  // namespace phasematch
