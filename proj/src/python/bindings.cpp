// Copyright 2026 The cavent Authors
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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cavent/cli/commands.hpp"
#include "cavent/dynamics.hpp"
#include "cavent/errors.hpp"
#include "cavent/measures.hpp"
#include "cavent/model.hpp"

namespace py = pybind11;
using namespace cavent;
using numkit::CMatrix;

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace {

Liouvillian as_liouvillian(const CMatrix& m)
{
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(m.rows()))));
    if (m.rows() != m.cols() || d * d != m.rows()) {
        throw Error(ErrorKind::Dimension, "Liouvillian must be D^2 x D^2");
    }
    return {static_cast<std::size_t>(d), m};
}

std::string repr_effective(const EffectiveParams& p)
{
    std::ostringstream os;
    os << "EffectiveParams(omega_eff=" << p.omega_eff << ", gamma=(" << p.gamma[0] << ", " << p.gamma[1]
       << "), n_t=(" << p.n_t[0] << ", " << p.n_t[1] << "), eta=" << p.eta << ")";
    return os.str();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Two-atom cavity entanglement under white-noise driving";

    static py::exception<Error> exc(m, "CaventError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(exc, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    py::class_<EffectiveParams>(m, "EffectiveParams")
        .def(py::init<>())
        .def_readwrite("omega_eff", &EffectiveParams::omega_eff)
        .def_readwrite("gamma", &EffectiveParams::gamma)
        .def_readwrite("n_t", &EffectiveParams::n_t)
        .def_readwrite("eta", &EffectiveParams::eta)
        .def_static("symmetric", &EffectiveParams::symmetric, py::arg("omega_eff"), py::arg("gamma"),
                    py::arg("n_t"))
        .def_static("single_driven", &EffectiveParams::single_driven, py::arg("omega_eff"),
                    py::arg("gamma"), py::arg("n_t"), py::arg("eta"))
        .def("is_symmetric", &EffectiveParams::is_symmetric)
        .def("is_single_driven", &EffectiveParams::is_single_driven)
        .def("__repr__", &repr_effective);

    py::class_<FullModelParams>(m, "FullModelParams")
        .def(py::init<>())
        .def_readwrite("omega_cavity", &FullModelParams::omega_cavity)
        .def_readwrite("omega_atom", &FullModelParams::omega_atom)
        .def_readwrite("g", &FullModelParams::g)
        .def_readwrite("kappa", &FullModelParams::kappa)
        .def_readwrite("n_max", &FullModelParams::n_max)
        .def_readwrite("gamma", &FullModelParams::gamma)
        .def_readwrite("n_t", &FullModelParams::n_t)
        .def("detuning_ratio", &FullModelParams::detuning_ratio)
        .def("effective", &FullModelParams::effective);

    m.def("effective_hamiltonian", &effective_hamiltonian, py::arg("params"));
    m.def("full_hamiltonian", &full_hamiltonian, py::arg("params"));
    m.def(
        "build_effective_liouvillian",
        [](const EffectiveParams& p) { return build_effective_liouvillian(p).matrix; },
        py::arg("params"), "16x16 generator acting on column-stacked density matrices");
    m.def(
        "build_full_liouvillian", [](const FullModelParams& p) { return build_full_liouvillian(p).matrix; },
        py::arg("params"));
    m.def(
        "partial_trace_cavity",
        [](const CMatrix& rho, int n_max) { return partial_trace_cavity(rho, n_max).matrix(); },
        py::arg("rho_full"), py::arg("n_max"));

    m.def(
        "analytic_state_symmetric",
        [](const EffectiveParams& p, double t) { return analytic_state_symmetric(p, t).matrix(); },
        py::arg("params"), py::arg("t"));
    m.def(
        "analytic_steady_asymmetric",
        [](const EffectiveParams& p) { return analytic_steady_asymmetric(p).matrix(); }, py::arg("params"));
    m.def(
        "propagate",
        [](const CMatrix& l, const CMatrix& rho0, double t) { return propagate(as_liouvillian(l), rho0, t); },
        py::arg("liouvillian"), py::arg("rho0"), py::arg("t"));
    m.def(
        "trajectory",
        [](const CMatrix& l, const CMatrix& rho0, const std::vector<double>& times) {
            return propagate_grid(as_liouvillian(l), rho0, times);
        },
        py::arg("liouvillian"), py::arg("rho0"), py::arg("times"));
    m.def(
        "numeric_steady", [](const CMatrix& l) { return numeric_steady(as_liouvillian(l)); },
        py::arg("liouvillian"));
    m.def(
        "product_state", [](const std::string& label) {
            return DensityMatrix4::product(parse_product_state(label)).matrix();
        },
        py::arg("label"), "projector onto |00>, |10> or |01>");

    m.def(
        "concurrence", [](const CMatrix& rho) { return concurrence(DensityMatrix4(rho)); }, py::arg("rho"));
    m.def(
        "concurrence_x", [](const CMatrix& rho) { return concurrence_x(DensityMatrix4(rho)); },
        py::arg("rho"));
    m.def(
        "correlation_matrix", [](const CMatrix& rho) { return correlation_matrix(DensityMatrix4(rho)); },
        py::arg("rho"));
    m.def(
        "bell_max", [](const CMatrix& rho) { return bell_max(DensityMatrix4(rho)); }, py::arg("rho"));
    m.def(
        "bell_max_xform", [](const CMatrix& rho) { return bell_max_xform(DensityMatrix4(rho)); },
        py::arg("rho"));
    m.def("omega_threshold", &omega_threshold, py::arg("gamma"), py::arg("eta"), py::arg("n_t"));
    m.def("nt_threshold", &nt_threshold, py::arg("gamma"), py::arg("eta"));
    m.def(
        "bell_bounds_for_concurrence",
        [](double c) {
            const BellBounds b = bell_bounds_for_concurrence(c);
            return py::make_tuple(b.upper, b.lower);
        },
        py::arg("c"), "(upper, lower or None)");
    m.def(
        "measure",
        [](const CMatrix& rho) {
            const MeasureReport r = measure(DensityMatrix4(rho));
            py::dict d;
            d["concurrence"] = r.concurrence;
            d["bell_max"] = r.bell_max;
            d["lambdas"] = r.lambdas;
            d["t_matrix"] = r.t_matrix;
            d["tt_eigs"] = r.tt_eigs;
            return d;
        },
        py::arg("rho"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
