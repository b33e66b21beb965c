/*
 * Copyright 2026 The gorlin authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gorlin/fixtures.hpp"
#include "gorlin/io.hpp"
#include "gorlin/verify.hpp"

namespace py = pybind11;
using namespace gorlin;

namespace {

/// String-valued snapshot of a resolution; exact values cross the boundary
/// as canonical text.
struct ResolutionView {
    int n = 0;
    std::string mode;
    std::string delta;
    std::vector<std::string> basis_b1, basis_b2;
    std::vector<std::string> b1, b3;
    std::vector<std::vector<std::string>> b2;
    std::vector<std::vector<std::string>> T, Q;
    std::string text;
    std::string json;
};

ResolutionView make_view(const ResolutionComplex& r) {
    ResolutionView v;
    v.n = r.n;
    v.mode = r.phi.is_generic() ? "generic" : "specialized";
    v.delta = r.cat.delta.str();
    for (std::size_t j = 0; j < r.b1.cols(); ++j) {
        v.basis_b1.push_back(r.b1.col_labels()[j].str());
        v.b1.push_back(r.b1.at(0, j).str());
    }
    for (std::size_t i = 0; i < r.b3.rows(); ++i) {
        v.basis_b2.push_back(r.b3.row_labels()[i].str());
        v.b3.push_back(r.b3.at(i, 0).str());
    }
    for (std::size_t i = 0; i < r.b2.rows(); ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < r.b2.cols(); ++j) row.push_back(r.b2.at(i, j).str());
        v.b2.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < r.cat.T.rows(); ++i) {
        std::vector<std::string> trow, qrow;
        for (std::size_t j = 0; j < r.cat.T.cols(); ++j) {
            trow.push_back(r.cat.T.at(i, j).str());
            qrow.push_back(r.cat.Q.at(i, j).str());
        }
        v.T.push_back(std::move(trow));
        v.Q.push_back(std::move(qrow));
    }
    v.text = resolution_to_text(r);
    v.json = resolution_to_json(r).dump(2);
    return v;
}

InverseSystem phi_from_list(
    int n, const std::vector<std::pair<std::array<int, 3>, std::string>>& coeffs) {
    std::vector<std::pair<Monomial, Rational>> c;
    c.reserve(coeffs.size());
    for (const auto& [e, v] : coeffs) {
        c.emplace_back(Monomial(e[0], e[1], e[2]), parse_rational(v));
    }
    return build_phi(n, c);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Gorenstein-linear resolutions from inverse-system coefficients";
    m.attr("__version__") = "0.1.0";

    py::register_exception<InputError>(m, "InputError");
    py::register_exception<DegreeError>(m, "DegreeError");
    py::register_exception<ShapeError>(m, "ShapeError");
    py::register_exception<CapacityError>(m, "CapacityError");
    py::register_exception<DegenerateInverseSystem>(m, "DegenerateSystemError");

    py::class_<InverseSystem>(m, "InverseSystem")
        .def_readonly("n", &InverseSystem::n)
        .def_property_readonly("is_generic", &InverseSystem::is_generic)
        .def("__str__", [](const InverseSystem& f) { return f.phi.str(); })
        .def("to_json",
             [](const InverseSystem& f) { return inverse_system_to_json(f).dump(2); });

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("passed", &CheckResult::pass)
        .def_readonly("witness", &CheckResult::witness)
        .def_readonly("millis", &CheckResult::millis)
        .def("__repr__", [](const CheckResult& c) {
            return "<" + c.name + ": " + (c.pass ? "pass" : "FAIL") + ">";
        });

    py::class_<VerificationReport>(m, "Report")
        .def_property_readonly("ok", &VerificationReport::all_pass)
        .def_readonly("checks", &VerificationReport::checks)
        .def("to_json",
             [](const VerificationReport& r) { return report_to_json(r, false).dump(2); })
        .def("__str__",
             [](const VerificationReport& r) { return report_to_text(r, false); });

    py::class_<ResolutionView>(m, "Resolution")
        .def_readonly("n", &ResolutionView::n)
        .def_readonly("mode", &ResolutionView::mode)
        .def_readonly("delta", &ResolutionView::delta)
        .def_readonly("basis_b1", &ResolutionView::basis_b1)
        .def_readonly("basis_b2", &ResolutionView::basis_b2)
        .def_readonly("b1", &ResolutionView::b1)
        .def_readonly("b2", &ResolutionView::b2)
        .def_readonly("b3", &ResolutionView::b3)
        .def_readonly("T", &ResolutionView::T)
        .def_readonly("Q", &ResolutionView::Q)
        .def("to_text", [](const ResolutionView& v) { return v.text; })
        .def("to_json", [](const ResolutionView& v) { return v.json; });

    m.def("build_phi", &phi_from_list, py::arg("n"), py::arg("coefficients"),
          "Specialized inverse system from ((a,b,c), value) pairs; values are "
          "decimal or p/q strings.");
    m.def(
        "load_phi_json",
        [](const std::string& text) {
            return inverse_system_from_json(nlohmann::json::parse(text));
        },
        py::arg("text"), "Inverse system from its JSON text form.");
    m.def("generic_phi", &generic_phi, py::arg("n"));
    m.def("colon_phi", &colon_inverse_system, py::arg("n"));
    m.def("random_phi", &random_phi, py::arg("n"), py::arg("seed"), py::arg("bound") = 9);

    m.def(
        "build_resolution",
        [](const InverseSystem& f) { return make_view(build_resolution(f)); },
        py::arg("phi"));
    m.def("full_report", &full_report, py::arg("phi"));
    m.def("check_colon_ideal", &check_colon_ideal, py::arg("n"));
    m.def("annihilator", [](const InverseSystem& f) {
        std::vector<std::string> out;
        for (const auto& g : annihilator_degree_n(f)) out.push_back(g.str());
        return out;
    });
    m.def(
        "monomials",
        [](const std::string& vars, int degree) {
            if (vars != "xyz" && vars != "yz") {
                throw InputError("vars must be \"xyz\" or \"yz\"");
            }
            std::vector<std::string> out;
            for (const auto& mm :
                 monomial_basis(vars == "xyz" ? VarSet::xyz : VarSet::yz, degree)) {
                out.push_back(mm.str());
            }
            return out;
        },
        py::arg("vars"), py::arg("degree"));
    m.def("run_examples", [] {
        VerificationReport rep;
        for (const auto& fx : example_fixtures()) {
            const FixtureDiff diff = check_fixture(fx);
            rep.add(CheckResult{fx.name, diff.ok, diff.details, 0.0});
        }
        return rep;
    });
}
