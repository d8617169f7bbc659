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

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"

namespace {

struct OutputOptions {
  std::string format = "csv";
  std::string out_path;
  phasematch::CommandOptions cmd;
};

void add_output_flags(CLI::App* sub, OutputOptions& o) {
  sub->add_option("--format", o.format, "Output encoding")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", o.out_path, "Write the report here instead of stdout");
  sub->add_option("--seed", o.cmd.seed, "Seed for randomized commands")->capture_default_str();
  sub->add_option("--tol", o.cmd.equivalence_tol, "Equivalence tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--structural-tol", o.cmd.structural_tol, "Structural tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

int emit(const phasematch::Report& report, const OutputOptions& o) {
  const std::string text =
      o.format == "json" ? phasematch::to_json(report) : phasematch::to_csv(report);
  if (o.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "phasematch: cannot open " << o.out_path << " for writing\n";
      return EXIT_FAILURE;
    }
    f << text;
  }
  if (report.pass && !*report.pass) {
    std::cerr << "phasematch: " << report.command << " reported failures\n";
    return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace phasematch;
  CLI::App app{"Generalized quantum-search amplitude engines and verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(PHASEMATCH_VERSION));

  OutputOptions out;
  std::function<Report()> action;

  auto* table1 = app.add_subcommand("table1", "Grover |b_k| at k near sqrt(N)/2");
  add_output_flags(table1, out);
  table1->callback([&] { action = [&] { return run_table1(out.cmd); }; });

  int t2_kmax = 100;
  auto* table2 = app.add_subcommand("table2", "|b_k| for small theta offsets, phi = 0, u = 0.1");
  add_output_flags(table2, out);
  table2->add_option("--kmax", t2_kmax, "Argmax horizon")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  table2->callback([&] { action = [&] { return run_table2(t2_kmax, out.cmd); }; });

  int pyr_max = 12;
  auto* pyramid = app.add_subcommand("pyramid", "Integer weights l_ki^(j) and t_ki^(j)");
  add_output_flags(pyramid, out);
  pyramid->add_option("--max-k", pyr_max, "Largest k")
      ->check(CLI::Range(1, kExactMaxK))
      ->capture_default_str();
  pyramid->callback([&] { action = [&] { return run_pyramid(pyr_max, out.cmd); }; });

  std::string sw_theta = "0:0.1:0.01";
  double sw_phi = 0.0;
  double sw_u = 0.1;
  double sw_u_im = 0.0;
  int sw_kmax = 100;
  auto* sweep = app.add_subcommand("sweep", "Max_k |b_k| over a theta grid");
  add_output_flags(sweep, out);
  sweep->add_option("--theta", sw_theta, "Theta grid A:B:STEP (radians)")->capture_default_str();
  sweep->add_option("--phi", sw_phi, "Phi (radians)")->capture_default_str();
  sweep->add_option("--u", sw_u, "Real part of U_tau,gamma")->capture_default_str();
  sweep->add_option("--u-im", sw_u_im, "Imaginary part of U_tau,gamma")->capture_default_str();
  sweep->add_option("--kmax", sw_kmax, "Sweep horizon")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->callback([&] {
    action = [&] {
      return run_sweep(parse_range(sw_theta), sw_phi, {sw_u, sw_u_im}, sw_kmax, out.cmd);
    };
  });

  std::string vf_scope = "all";
  int vf_cases = 20;
  auto* verify = app.add_subcommand("verify", "Oracle-vs-engine equivalence suite");
  add_output_flags(verify, out);
  verify->add_option("--scope", vf_scope, "Which engine to check")
      ->check(CLI::IsMember({"2d", "4d", "all"}))
      ->capture_default_str();
  verify->add_option("--cases", vf_cases, "Number of seeded cases per scope")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->callback([&] {
    action = [&] { return run_verify(parse_scope(vf_scope), vf_cases, out.cmd); };
  });

  std::string cf_family = "present";
  CoeffsRequest cf;
  double cf_u = 0.1;
  double cf_u_im = 0.0;
  auto* coeffs = app.add_subcommand("coeffs", "Two-dimensional coefficients alpha, beta, lambda, delta");
  add_output_flags(coeffs, out);
  coeffs->add_option("--family", cf_family, "Coefficient family")
      ->check(CLI::IsMember({"present", "grover", "long", "hoyer"}))
      ->capture_default_str();
  coeffs->add_option("--theta", cf.theta, "Theta (radians)")->capture_default_str();
  coeffs->add_option("--phi", cf.phi, "Phi (radians); also Hoyer's phi")->capture_default_str();
  coeffs->add_option("--u", cf_u, "Real part of U_tau,gamma")->capture_default_str();
  coeffs->add_option("--u-im", cf_u_im, "Imaginary part of U_tau,gamma")->capture_default_str();
  coeffs->add_option("--a", cf.hoyer.a, "Hoyer parameter a in [0, 1]")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  coeffs->add_option("--varphi", cf.hoyer.varphi, "Hoyer phase varphi")->capture_default_str();
  coeffs->callback([&] {
    action = [&] {
      cf.family = parse_family(cf_family);
      cf.u = {cf_u, cf_u_im};
      cf.hoyer.phi = cf.phi;
      return run_coeffs(cf, out.cmd);
    };
  });

  Eigen::Index cs_dim = 8;
  auto* construct = app.add_subcommand("construct", "Block-symmetric V with U = V^+ P and its checks");
  add_output_flags(construct, out);
  construct->add_option("--dim", cs_dim, "Even dimension N")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  construct->callback([&] { action = [&] { return run_construct(cs_dim, out.cmd); }; });

  if (argc > 1 && argv[1][0] != '-' && app.get_subcommand_no_throw(argv[1]) == nullptr) {
    std::cerr << "phasematch: unknown command '" << argv[1] << "'\n"
              << "Run with --help for the list of commands.\n";
    return 2;
  }
  CLI11_PARSE(app, argc, argv);

  try {
    return emit(action(), out);
  } catch (const std::exception& e) {
    std::cerr << "phasematch: " << e.what() << '\n';
    return 2;
  }
}
