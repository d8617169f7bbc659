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

#include "doctest.h"

#include "phasematch/commands.hpp"

#include <sstream>

#include "json.hpp"

using namespace phasematch;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    out.push_back(fields);
  }
  return out;
}

std::string json_text(const nlohmann::ordered_json& v) {
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void check_encodings_agree(const Report& r) {
  const auto csv = parse_csv(to_csv(r));
  const auto json = nlohmann::ordered_json::parse(to_json(r));
  REQUIRE(csv.size() == r.rows.size() + 1);
  CHECK(csv[0] == r.columns);
  REQUIRE(json["rows"].size() == r.rows.size());
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    for (std::size_t j = 0; j < r.columns.size(); ++j) {
      CHECK(csv[i + 1][j] == json_text(json["rows"][i][r.columns[j]]));
    }
  }
}

}  // namespace

TEST_CASE("format_number") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(1e-20) == "1e-20");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("table1") {
  const auto r = run_table1();
  REQUIRE(r.pass.has_value());
  CHECK(*r.pass);
  REQUIRE(r.rows.size() == 4);
  CHECK(std::get<std::int64_t>(r.rows[0][0]) == 100);
  CHECK(std::get<double>(r.rows[0][4]) == doctest::Approx(0.9375).epsilon(5e-4));
  check_encodings_agree(r);
}

TEST_CASE("table2") {
  const auto r = run_table2();
  REQUIRE(r.pass.has_value());
  CHECK(*r.pass);
  REQUIRE(r.rows.size() == 5);
  // The listed k for theta = 0.01 is not the argmax over k <= 100.
  CHECK(std::get<std::int64_t>(r.rows[0][6]) == 86);
  check_encodings_agree(r);
  CHECK_THROWS_AS(run_table2(0), std::invalid_argument);
}

TEST_CASE("json layout") {
  const auto json = nlohmann::ordered_json::parse(to_json(run_table1({7, 1e-10, 1e-9})));
  CHECK(json["command"] == "table1");
  CHECK(json["metadata"]["seed"] == 7);
  CHECK(json["metadata"]["tolerance"].get<double>() == 1e-9);
  CHECK(json["pass"] == true);
  CHECK(json["rows"].is_array());
}

TEST_CASE("pyramid") {
  const auto r = run_pyramid(7);
  bool found = false;
  for (const auto& row : r.rows) {
    if (std::get<std::string>(row[0]) == "l" && std::get<std::int64_t>(row[1]) == 1 &&
        std::get<std::int64_t>(row[2]) == 7 && std::get<std::int64_t>(row[3]) == 2) {
      CHECK(std::get<std::int64_t>(row[4]) == 9);
      found = true;
    }
  }
  CHECK(found);
  CHECK_FALSE(r.pass.has_value());
  CHECK_THROWS_AS(run_pyramid(0), std::invalid_argument);
  CHECK_THROWS_AS(run_pyramid(kExactMaxK + 1), std::invalid_argument);
}

TEST_CASE("parse_range") {
  const auto single = parse_range("0.25");
  CHECK(single.start == 0.25);
  CHECK(single.stop == 0.25);
  const auto grid = parse_range("0:0.05:0.01");
  CHECK(grid.stop == 0.05);
  CHECK(grid.step == 0.01);
  CHECK_THROWS_AS(parse_range("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("0:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("0:1:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("1:0:0.1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("0:1:0.1:3"), std::invalid_argument);
}

TEST_CASE("sweep") {
  const auto r = run_sweep(parse_range("0:0.05:0.01"), 0.0, 0.1, 100);
  CHECK(r.rows.size() == 6);
  CHECK(std::get<std::int64_t>(r.rows[1][1]) == 86);
  check_encodings_agree(r);
  CHECK_THROWS_AS(run_sweep(parse_range("0"), 0.0, 2.0, 10), std::invalid_argument);
}

TEST_CASE("verify") {
  const auto a = run_verify(VerifyScope::kTwoDim, 6, {1});
  REQUIRE(a.pass.has_value());
  CHECK(*a.pass);
  const auto b = run_verify(VerifyScope::kFourDim, 4, {1});
  CHECK(*b.pass);

  const auto x = run_verify(VerifyScope::kAll, 3, {2});
  const auto y = run_verify(VerifyScope::kAll, 3, {2});
  CHECK(to_json(x) == to_json(y));
  CHECK(x.rows.size() == 6);
  CHECK(to_json(x) != to_json(run_verify(VerifyScope::kAll, 3, {3})));

  CHECK(parse_scope("all") == VerifyScope::kAll);
  CHECK_THROWS_AS(parse_scope("3d"), std::invalid_argument);
  CHECK_THROWS_AS(run_verify(VerifyScope::kAll, 0), std::invalid_argument);
}

TEST_CASE("coeffs") {
  CoeffsRequest req;
  req.family = parse_family("present");
  const auto r = run_coeffs(req);
  REQUIRE(r.rows.size() == 4);
  CHECK(std::get<double>(r.rows[0][1]) == doctest::Approx(0.96));
  CHECK(std::get<double>(r.rows[1][1]) == doctest::Approx(0.2));
  CHECK_THROWS_AS(parse_family("custom"), std::invalid_argument);
  req.family = Provenance::kHoyer;
  req.hoyer = {2.0, 0.0, 0.0};
  CHECK_THROWS_AS(run_coeffs(req), std::invalid_argument);
}

TEST_CASE("construct") {
  const auto r = run_construct(8);
  REQUIRE(r.pass.has_value());
  CHECK(*r.pass);
  CHECK(r.rows.size() == 9);
  CHECK(r.matrices.size() == 2);
  check_encodings_agree(r);
  CHECK_THROWS_AS(run_construct(7), std::invalid_argument);
}

TEST_CASE("derive_seed separates streams") {
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 2, 4));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 3));
  CHECK(derive_seed(1, 2, 3) != derive_seed(2, 2, 3));
}
