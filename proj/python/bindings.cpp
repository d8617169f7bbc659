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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phasematch/commands.hpp"
#include "phasematch/engine2d.hpp"
#include "phasematch/engine4d.hpp"
#include "phasematch/hermitian.hpp"
#include "phasematch/oracle.hpp"

namespace py = pybind11;
using namespace phasematch;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Phase-matched amplitude amplification: engines, oracle and reports";
  m.attr("__version__") = PHASEMATCH_VERSION;

  py::class_<AlgorithmParams>(m, "AlgorithmParams")
      .def(py::init<double, double, Complex>(), py::arg("theta"), py::arg("phi"), py::arg("u"))
      .def_readwrite("theta", &AlgorithmParams::theta)
      .def_readwrite("phi", &AlgorithmParams::phi)
      .def_readwrite("u", &AlgorithmParams::u);

  py::class_<TwoDimCoefficients>(m, "TwoDimCoefficients")
      .def(py::init([](Complex a, Complex b, Complex l, Complex d) {
             return TwoDimCoefficients{a, b, l, d, Provenance::kCustom};
           }),
           py::arg("alpha"), py::arg("beta"), py::arg("lambda_"), py::arg("delta"))
      .def_readonly("alpha", &TwoDimCoefficients::alpha)
      .def_readonly("beta", &TwoDimCoefficients::beta)
      .def_readonly("lambda_", &TwoDimCoefficients::lambda)
      .def_readonly("delta", &TwoDimCoefficients::delta)
      .def_property_readonly("provenance",
                             [](const TwoDimCoefficients& c) { return std::string(to_string(c.provenance)); });

  py::class_<PhaseCondition>(m, "PhaseCondition")
      .def_readonly("threshold", &PhaseCondition::threshold)
      .def_readonly("ratio_l", &PhaseCondition::ratio_l)
      .def_readonly("satisfied", &PhaseCondition::satisfied);

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("k_star", &SweepResult::k_star)
      .def_readonly("max_abs_b", &SweepResult::max_abs_b)
      .def_readonly("condition", &SweepResult::condition);

  m.def("present_coeffs",
        [](double theta, double phi, Complex u) { return present_coeffs({theta, phi, u}); },
        py::arg("theta"), py::arg("phi"), py::arg("u"));
  m.def("grover_coeffs", &grover_coeffs, py::arg("u"));
  m.def("long_coeffs", &long_coeffs, py::arg("theta"), py::arg("phi"), py::arg("u"));
  m.def("hoyer_coeffs",
        [](double a, double phi, double varphi) { return hoyer_coeffs({a, phi, varphi}); },
        py::arg("a"), py::arg("phi"), py::arg("varphi"));

  // Trajectories come back as (a, b) lists indexed by k.
  m.def(
      "iterate2",
      [](const TwoDimCoefficients& c, int k_max) {
        const auto traj = iterate2(c, k_max);
        std::vector<Complex> a, b;
        for (const auto& s : traj.steps) {
          a.push_back(s.a);
          b.push_back(s.b);
        }
        return py::make_tuple(a, b);
      },
      py::arg("coeffs"), py::arg("k_max"));
  m.def("exact_b", [](const TwoDimCoefficients& c, int k) { return exact_b(c, k); },
        py::arg("coeffs"), py::arg("k"));
  m.def("exact_a", [](const TwoDimCoefficients& c, int k) { return exact_a(c, k); },
        py::arg("coeffs"), py::arg("k"));
  m.def("binom", &binom, py::arg("n"), py::arg("r"));
  m.def("l_coeff", &l_coeff, py::arg("k"), py::arg("i"), py::arg("j"));
  m.def("t_coeff", &t_coeff, py::arg("k"), py::arg("i"), py::arg("j"));
  m.def("approx_b", &approx_b, py::arg("params"), py::arg("k"));
  m.def("closed_form_magnitude", &closed_form_magnitude, py::arg("params"), py::arg("k"));
  m.def("sweep_max",
        py::overload_cast<const AlgorithmParams&, int>(&sweep_max),
        py::arg("params"), py::arg("k_max"));
  m.def("sweep_max_coeffs",
        py::overload_cast<const TwoDimCoefficients&, int>(&sweep_max),
        py::arg("coeffs"), py::arg("k_max"));
  m.def("phase_condition", &phase_condition, py::arg("params"));

  m.def(
      "iterate4",
      [](double theta, double phi, Complex u, Complex v, Complex vu_gg, Complex uv_tt,
         int k_max) {
        const auto traj = iterate4(four_dim_coeffs({theta, phi, u, v, vu_gg, uv_tt}), k_max);
        std::vector<std::array<Complex, 4>> out;
        for (const auto& s : traj.steps) out.push_back({s.a, s.b, s.c, s.d});
        return out;
      },
      py::arg("theta"), py::arg("phi"), py::arg("u"), py::arg("v"), py::arg("vu_gg"),
      py::arg("uv_tt"), py::arg("k_max"));
  m.def(
      "approx4",
      [](double theta, double phi, Complex u, int k) {
        const auto r = approx4(theta, phi, u, k);
        return py::make_tuple(r.a_k, r.c_next);
      },
      py::arg("theta"), py::arg("phi"), py::arg("u"), py::arg("k"));

  m.def("pair_swap", &pair_swap, py::arg("dim"));
  m.def("random_unitary", &random_unitary, py::arg("dim"), py::arg("seed"));
  m.def("random_commuting_unitary", &random_commuting_unitary, py::arg("dim"), py::arg("seed"));
  m.def("is_block_symmetric", &is_block_symmetric, py::arg("v"), py::arg("tol") = kStructuralTol);
  m.def(
      "companion",
      [](const DenseMatrix& v) {
        const auto p = companion(v);
        return py::make_tuple(p.v, p.u);
      },
      py::arg("v"));

  m.def(
      "oracle_amplitudes",
      [](const DenseMatrix& u, double theta, double phi, int k_max,
         std::optional<DenseMatrix> v) {
        const auto cfg = make_config(u, theta, phi, std::move(v));
        const auto run = evolve(build_q(cfg), cfg, k_max);
        std::vector<std::vector<Complex>> out;
        for (const auto& d : run.decompositions) {
          out.emplace_back(d.coefficients.data(), d.coefficients.data() + d.coefficients.size());
        }
        return out;
      },
      py::arg("u"), py::arg("theta"), py::arg("phi"), py::arg("k_max"),
      py::arg("v") = py::none());
  m.def("walsh_hadamard", &walsh_hadamard, py::arg("n_qubits"));

  // Reports as JSON text, identical to the command-line output.
  m.def("table1_json", [] { return to_json(run_table1()); });
  m.def("table2_json", [](int k_max) { return to_json(run_table2(k_max)); },
        py::arg("k_max") = 100);
  m.def(
      "verify_json",
      [](const std::string& scope, int cases, std::uint64_t seed) {
        CommandOptions opts;
        opts.seed = seed;
        return to_json(run_verify(parse_scope(scope), cases, opts));
      },
      py::arg("scope") = "all", py::arg("cases") = 5, py::arg("seed") = 1);

  py::register_exception<ConditioningError>(m, "ConditioningError", PyExc_ValueError);
}
