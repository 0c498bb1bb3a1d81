// Copyright 2026 The topostab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "topostab/cli.hpp"
#include "topostab/cyclo.hpp"
#include "topostab/entanglement.hpp"
#include "topostab/gates.hpp"
#include "topostab/parse.hpp"
#include "topostab/so3.hpp"
#include "topostab/stabilizer.hpp"
#include "topostab/surgery.hpp"
#include "topostab/tensornet.hpp"

namespace py = pybind11;
using namespace topostab;

namespace {

SignConvention sign_of(bool flip) { return flip ? SignConvention::flipped : SignConvention::standard; }

std::vector<std::string> site_names(const DenseState& s) {
  std::vector<std::string> out;
  for (const auto& site : s.sites()) out.push_back(site.name);
  return out;
}

std::vector<std::tuple<std::vector<int64_t>, int>> exact_amplitudes(const DenseState& s) {
  std::vector<std::tuple<std::vector<int64_t>, int>> out;
  for (const auto& a : s.amps()) out.emplace_back(a.coeffs(), a.kden());
  return out;
}

}  // namespace

PYBIND11_MODULE(_topostab, m) {
  m.doc() = "Exact U(1)_k state preparation from surgery links and tensor networks.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<IllDefinedError>(m, "IllDefinedError", PyExc_ArithmeticError);
  py::register_exception<NotStabilizerError>(m, "NotStabilizerError", PyExc_ValueError);

  py::class_<DenseState>(m, "State")
      .def_property_readonly("level", [](const DenseState& s) { return s.level().k(); })
      .def_property_readonly("sites", &site_names)
      .def_property_readonly("num_sites", &DenseState::num_sites)
      .def("amplitudes", &DenseState::to_complex, "Amplitudes as complex numbers, first site slowest.")
      .def("exact_amplitudes", &exact_amplitudes,
           "Amplitudes as (coefficients over powers of zeta_4k, power of k in the denominator).")
      .def("is_zero", &DenseState::is_zero)
      .def("__repr__", [](const DenseState& s) {
        return "<State level=" + std::to_string(s.level().k()) + " sites=" + std::to_string(s.num_sites()) + ">";
      });

  py::class_<SurgeryPresentation>(m, "Presentation")
      .def_property_readonly("level", [](const SurgeryPresentation& p) { return p.level().k(); })
      .def_property_readonly("names",
                             [](const SurgeryPresentation& p) {
                               std::vector<std::string> out;
                               for (const auto& c : p.components()) out.push_back(c.name);
                               return out;
                             })
      .def_property_readonly("linking", &SurgeryPresentation::linking)
      .def("__str__", &print_manifold);

  py::class_<TensorNetwork>(m, "Network")
      .def_property_readonly("level", [](const TensorNetwork& n) { return n.level().k(); })
      .def("__str__", &print_network);

  m.def("parse_manifold", &parse_manifold, py::arg("text"), py::arg("default_level") = std::nullopt);
  m.def("parse_network", &parse_network, py::arg("text"), py::arg("default_level") = std::nullopt);

  m.def(
      "prepare",
      [](const SurgeryPresentation& p, bool sign_flip) {
        const WellDefinedness wd = well_definedness(p, sign_of(sign_flip));
        if (!wd.ok) throw IllDefinedError(wd.diagnostic);
        return state_from_presentation(p, sign_of(sign_flip));
      },
      py::arg("presentation"), py::arg("sign_flip") = false,
      "State prepared by a surgery presentation; raises IllDefinedError for the zero state.");
  m.def(
      "contract", [](const TensorNetwork& n) { return contract(n); }, py::arg("network"));
  m.def(
      "fusion_state", [](int k) { return fusion_state(Level(k)); }, py::arg("k"));

  m.def("is_stabilizer", &is_stabilizer, py::arg("state"));
  m.def(
      "tableau",
      [](const DenseState& s) {
        StabilizerCheck c = check_stabilizer(s);
        if (!c.is_stabilizer()) throw NotStabilizerError("not a stabilizer state");
        return c.certificate->to_string();
      },
      py::arg("state"), "Stabilizer generators, one 'w^c Z[..] X[..]' line each.");

  m.def(
      "flat_entropy",
      [](const DenseState& s, const std::vector<size_t>& region) {
        const EntropyValue e = flat_entropy(s, region);
        return py::make_tuple(e.dits, e.nats, e.exact_dits);
      },
      py::arg("state"), py::arg("region"), "(dits, nats, exact integer dits or None).");
  m.def(
      "ghz_count",
      [](const DenseState& s, const std::vector<size_t>& a, const std::vector<size_t>& b,
         const std::vector<size_t>& c) { return ghz_count(s, a, b, c); },
      py::arg("state"), py::arg("a"), py::arg("b"), py::arg("c"));

  m.def(
      "quadratic_gauss_sum", [](int k, int64_t a, int64_t b) { return quadratic_gauss_sum(Level(k), a, b).to_complex(); },
      py::arg("k"), py::arg("a"), py::arg("b"));

  m.def(
      "fusion_rules",
      [](int r) {
        const FusionTable t = fusion_rules(r);
        std::vector<std::vector<std::vector<int>>> out(t.anyons, std::vector<std::vector<int>>(t.anyons));
        for (int i = 0; i < t.anyons; ++i)
          for (int j = 0; j < t.anyons; ++j)
            for (int l = 0; l < t.anyons; ++l) out[i][j].push_back(t.at(i, j, l));
        return out;
      },
      py::arg("r"), "N[i][j][l] for the integer spins 0..(r-1)/2.");
  m.def("verlinde_dim", &verlinde_dim, py::arg("r"), py::arg("genus"));
  m.def("dimension_inequality", &dimension_inequality, py::arg("r"));

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        const RunResult r = run(args);
        return py::make_tuple(r.status, r.out, r.err);
      },
      py::arg("args"), "Runs one command line; returns (status, stdout, stderr).");
}
