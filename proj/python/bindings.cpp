// Copyright 2026 The qmlab Authors
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

// Python bindings. Field elements cross the boundary as integer encodings and
// sets as sorted lists; reports cross as JSON text parsed on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "qmlab/cli.hpp"
#include "qmlab/error.hpp"
#include "qmlab/galois.hpp"
#include "qmlab/pqm.hpp"
#include "qmlab/residues.hpp"
#include "qmlab/rscode.hpp"
#include "qmlab/scheme_io.hpp"
#include "qmlab/shamir7.hpp"

namespace py = pybind11;
using namespace qmlab;

namespace {

std::vector<std::uint32_t> values(const ElemSet& s) { return s.values(); }

ElemSet to_set(const FieldCtx& f, const std::vector<std::uint32_t>& xs) {
  ElemSet s(f.q());
  for (std::uint32_t v : xs) s.insert(f.elem(v));
  return s;
}

}  // namespace

PYBIND11_MODULE(_qmlab, m) {
  m.doc() = "Finite-field leakage lab: native core";
  py::register_exception<Error>(m, "QmlabError", PyExc_ValueError);

  py::class_<FieldCtx, std::shared_ptr<FieldCtx>>(m, "Field")
      .def(py::init([](std::uint32_t q) {
             return std::const_pointer_cast<FieldCtx>(FieldCtx::of_order(q));
           }),
           py::arg("q"))
      .def_property_readonly("p", &FieldCtx::p)
      .def_property_readonly("e", &FieldCtx::e)
      .def_property_readonly("q", &FieldCtx::q)
      .def_property_readonly("irreducible", &FieldCtx::irreducible)
      .def_property_readonly("generator",
                             [](const FieldCtx& f) { return f.generator().value; })
      .def("add", [](const FieldCtx& f, std::uint32_t a, std::uint32_t b) {
        return f.add(f.elem(a), f.elem(b)).value;
      })
      .def("sub", [](const FieldCtx& f, std::uint32_t a, std::uint32_t b) {
        return f.sub(f.elem(a), f.elem(b)).value;
      })
      .def("mul", [](const FieldCtx& f, std::uint32_t a, std::uint32_t b) {
        return f.mul(f.elem(a), f.elem(b)).value;
      })
      .def("inv", [](const FieldCtx& f, std::uint32_t a) {
        return f.inv(f.elem(a)).value;
      })
      .def("pow", [](const FieldCtx& f, std::uint32_t a, std::uint64_t n) {
        return f.pow(f.elem(a), n).value;
      })
      .def("trace", [](const FieldCtx& f, std::uint32_t a) {
        return f.trace(f.elem(a)).value;
      })
      .def("__repr__", [](const FieldCtx& f) {
        return "Field(q=" + std::to_string(f.q()) + ")";
      });

  m.def("omega", [](std::uint32_t q) {
    std::vector<std::uint32_t> out;
    for (Elem x : omega_set(FieldCtx::of_order(q)).elements) out.push_back(x.value);
    return out;
  }, py::arg("q"), "Omega_q in its canonical order.");

  m.def("sqrt_table", [](std::uint32_t q) {
    const SqrtSystem sys = build_sqrt_system(FieldCtx::of_order(q));
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (Elem g : sys.omega_set().elements) out.emplace_back(g.value, sys.sqrt(g).value);
    return out;
  }, py::arg("q"), "(g, sqrt(g)) for g in Omega_q.");

  m.def("scaled_pair", [](std::uint32_t q) {
    const ScaledPair p = canonical_scaled_pair(FieldCtx::of_order(q));
    return std::make_tuple(p.a.value, p.b.value);
  }, py::arg("q"));

  m.def("scaled_pair_union_size", [](std::uint32_t q, std::uint32_t delta) {
    const SqrtSystem sys = build_sqrt_system(FieldCtx::of_order(q));
    return scaled_pair_union_size(sys, sys.pair(), sys.ctx()->elem(delta));
  }, py::arg("q"), py::arg("delta"));

  m.def("b11", [](std::uint32_t q) { return values(b11(*FieldCtx::of_order(q))); },
        py::arg("q"), "B_1(1) = {m + 1/m}.");

  m.def("bucket_eval", [](std::uint32_t q, std::uint32_t gamma, std::uint32_t alpha) {
    const FieldPtr f = FieldCtx::of_order(q);
    return values(bucket_eval(*f, f->elem(gamma), f->elem(alpha)));
  }, py::arg("q"), py::arg("gamma"), py::arg("alpha"));

  m.def("gf7_scheme_json", [] { return write_scheme_string(gf7_scheme()); });
  m.def("verify_gf7", [] { return verify_gf7(); });
  m.def("figure1_table", [] {
    std::vector<std::vector<std::vector<std::uint32_t>>> out;
    for (const auto& row : figure1_table()) {
      out.emplace_back();
      for (const ElemSet& s : row) out.back().push_back(values(s));
    }
    return out;
  });
  m.def("one_bit_leak", [](std::uint32_t alpha, const std::vector<std::uint32_t>& T,
                           int bit) {
    const FieldPtr f = gf7_field();
    return values(one_bit_leak(f, f->elem(alpha), to_set(*f, T), bit));
  }, py::arg("alpha"), py::arg("T"), py::arg("bit"));

  m.def("bandwidth_bound", [](std::uint32_t q) {
    const BoundReport b = bandwidth_bound(*FieldCtx::of_order(q));
    py::dict d;
    d["q"] = b.q;
    d["initial_points"] = b.initial_points;
    d["real_bound"] = b.real_bound ? py::cast(*b.real_bound) : py::none();
    d["integer_round_bound"] =
        b.integer_round_bound ? py::cast(*b.integer_round_bound) : py::none();
    return d;
  }, py::arg("q"));

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = cmd_dispatch(args, out, err);
    }
    return std::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs one CLI command; returns (exit code, stdout, stderr).");
}
