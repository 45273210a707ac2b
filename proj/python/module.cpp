// Copyright 2026 The Hypercode Authors
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypercode/chain.hpp"
#include "hypercode/css.hpp"
#include "hypercode/hypermap.hpp"
#include "hypercode/io.hpp"
#include "hypercode/perm.hpp"
#include "hypercode/reduce.hpp"
#include "hypercode/verify.hpp"

namespace py = pybind11;
using namespace hypercode;

namespace {

Hypermap hypermap_from_cycles(std::size_t darts, const std::string &alpha,
                              const std::string &sigma) {
  return Hypermap(parse_cycles(alpha, darts), parse_cycles(sigma, darts));
}

SpecialDarts special_for(const Hypermap &h, SpecialKind kind,
                         const std::optional<std::vector<Dart>> &darts) {
  if (!darts) return default_special_darts(h, kind);
  std::vector<Dart> zero_based;
  for (Dart d : *darts) {
    if (d == 0) throw InvalidSpecialDartsError("dart labels are 1-based");
    zero_based.push_back(d - 1);
  }
  return make_special_darts(h, kind, std::move(zero_based));
}

std::vector<std::vector<Dart>> one_based(const std::vector<Cycle> &cycles) {
  std::vector<std::vector<Dart>> out;
  for (const auto &c : cycles) {
    std::vector<Dart> shifted;
    for (Dart d : c) shifted.push_back(d + 1);
    out.push_back(std::move(shifted));
  }
  return out;
}

std::vector<Dart> one_based(const std::vector<Dart> &darts) {
  std::vector<Dart> out;
  for (Dart d : darts) out.push_back(d + 1);
  return out;
}

css::CssCode build_code(const Hypermap &h, const std::string &kind,
                        const std::optional<std::vector<Dart>> &special) {
  if (kind == "face") return css::assemble(chain::face_code(h, special_for(h, SpecialKind::kPerEdge, special)));
  if (kind == "edge") return css::assemble(chain::edge_code(h, special_for(h, SpecialKind::kPerFace, special)));
  if (kind == "full") return css::assemble(chain::full_code(h));
  throw std::invalid_argument("unknown code kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_hypercode, m) {
  m.doc() = "Quantum CSS codes from combinatorial hypermaps.";

  py::register_exception<io::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CycleParseError>(m, "CycleParseError", PyExc_ValueError);
  py::register_exception<css::InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<Dart>>(), py::arg("images"),
           "Permutation from 0-based images: i maps to images[i].")
      .def_static("parse", &parse_cycles, py::arg("text"), py::arg("degree"),
                  "Parse 1-based cycle notation such as '(1 2 3)(4 5)'.")
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("images",
                             [](const Permutation &p) {
                               return std::vector<Dart>(p.images().begin(), p.images().end());
                             })
      .def("__call__", &Permutation::operator(), py::arg("i"))
      .def("inverse", [](const Permutation &p) { return inverse(p); })
      .def("then", [](const Permutation &p, const Permutation &q) { return compose(p, q); },
           py::arg("other"), "Apply self, then other.")
      .def("__eq__", [](const Permutation &a, const Permutation &b) { return a == b; })
      .def("__str__", [](const Permutation &p) { return format_cycles(p); })
      .def("__repr__", [](const Permutation &p) { return "Permutation('" + format_cycles(p) + "')"; });

  py::class_<Hypermap>(m, "Hypermap")
      .def(py::init<Permutation, Permutation>(), py::arg("alpha"), py::arg("sigma"))
      .def(py::init(&hypermap_from_cycles), py::arg("darts"), py::arg("alpha"), py::arg("sigma"))
      .def_property_readonly("alpha", &Hypermap::alpha)
      .def_property_readonly("sigma", &Hypermap::sigma)
      .def_property_readonly("darts", &Hypermap::darts)
      .def_property_readonly("vertices", [](const Hypermap &h) { return one_based(h.vertices().cycles); })
      .def_property_readonly("edges", [](const Hypermap &h) { return one_based(h.edges().cycles); })
      .def_property_readonly("faces", [](const Hypermap &h) { return one_based(h.faces().cycles); })
      .def_property_readonly("euler_characteristic", [](const Hypermap &h) { return euler_characteristic(h); })
      .def_property_readonly("genus", [](const Hypermap &h) { return genus(h); })
      .def("dual", [](const Hypermap &h) { return dual(h); })
      .def("triangle_dual", [](const Hypermap &h) { return triangle_dual(h); })
      .def("contrary", [](const Hypermap &h) { return contrary(h); })
      .def("nabla", [](const Hypermap &h) { return nabla(h); })
      .def("to_json", [](const Hypermap &h) { return io::export_json(h); })
      .def("to_dot", &io::walsh_dot)
      .def("__eq__", [](const Hypermap &a, const Hypermap &b) { return a == b; })
      .def("__str__", [](const Hypermap &h) { return io::format_hypermap_file(h); });

  m.def("parse_hypermap", [](const std::string &text) { return io::parse_hypermap_file(text).hypermap; },
        py::arg("text"), "Parse the darts/alpha/sigma text format.");
  m.def("random_hypermap", py::overload_cast<std::size_t, std::uint64_t>(&random_hypermap),
        py::arg("darts"), py::arg("seed"));
  m.def("check_nabla_identity", &check_nabla_identity, py::arg("hypermap"));

  py::class_<css::ClassDistance>(m, "ClassDistance")
      .def_readonly("weight", &css::ClassDistance::weight)
      .def_readonly("exact", &css::ClassDistance::exact);

  py::class_<css::DistanceResult>(m, "DistanceResult")
      .def_readonly("has_logicals", &css::DistanceResult::has_logicals)
      .def_readonly("x", &css::DistanceResult::x)
      .def_readonly("z", &css::DistanceResult::z)
      .def_readonly("d", &css::DistanceResult::d);

  py::class_<css::CssCode>(m, "CssCode")
      .def_readonly("n", &css::CssCode::n)
      .def_readonly("k", &css::CssCode::k)
      .def_property_readonly("hx", [](const css::CssCode &c) { return c.hx.row_strings(); })
      .def_property_readonly("hz", [](const css::CssCode &c) { return c.hz.row_strings(); })
      .def_property_readonly("qubits", [](const css::CssCode &c) { return one_based(c.qubit_labels); })
      .def_property_readonly("stabilizers", &css::stabilizer_strings)
      .def("distance",
           [](const css::CssCode &c, std::size_t max_weight, bool allow_large) {
             return css::distance(c, {.max_weight = max_weight, .allow_large = allow_large});
           },
           py::arg("max_weight") = 6, py::arg("allow_large") = false)
      .def("to_json", [](const css::CssCode &c) { return io::export_json(c); });

  m.def("code", &build_code, py::arg("hypermap"), py::arg("kind") = "face",
        py::arg("special") = py::none(),
        "CSS code of kind 'face', 'edge' or 'full'. Special darts are 1-based; "
        "defaults take the smallest dart of each edge (face) or face (edge).");

  py::class_<reduce::CellComplex>(m, "CellComplex")
      .def_property_readonly("one_cells", [](const reduce::CellComplex &c) { return one_based(c.one_cells); })
      .def_readonly("incidence21", &reduce::CellComplex::incidence21)
      .def_property_readonly("euler_characteristic",
                             [](const reduce::CellComplex &c) { return reduce::euler_characteristic(c); })
      .def_property_readonly("homology_dimension", &reduce::homology_dimension)
      .def("validate",
           [](const reduce::CellComplex &c) {
             std::vector<std::tuple<std::string, bool, std::string>> out;
             for (const auto &check : reduce::validate_surface(c).checks) {
               out.emplace_back(check.name, check.passed, check.detail);
             }
             return out;
           },
           "List of (name, passed, detail) surface checks.")
      .def("to_json", [](const reduce::CellComplex &c) { return io::export_json(c); });

  m.def("reduce",
        [](const Hypermap &h, const std::optional<std::vector<Dart>> &special) {
          return reduce::reduce_to_surface(h, special_for(h, SpecialKind::kPerEdge, special));
        },
        py::arg("hypermap"), py::arg("special") = py::none());

  m.def("verify",
        [](std::size_t trials, std::size_t max_darts, std::uint64_t seed) {
          return verify::run_verification({trials, max_darts, seed}).to_json();
        },
        py::arg("trials") = 500, py::arg("max_darts") = 10, py::arg("seed") = 7,
        "Run the randomized identity checks; returns the JSON report.");
}
