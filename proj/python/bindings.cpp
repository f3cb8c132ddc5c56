// Copyright 2026 The qswitch Authors
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
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qswitch/channels.hpp"
#include "qswitch/divisibility.hpp"
#include "qswitch/experiments.hpp"
#include "qswitch/open_system.hpp"
#include "qswitch/switch_cqs.hpp"
#include "qswitch/switch_uqs.hpp"

namespace py = pybind11;
using namespace qswitch;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

Matrix to_matrix(const ComplexArray &a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1) || a.shape(0) == 0)
        throw std::invalid_argument("expected a non-empty square matrix");
    const auto n = static_cast<std::size_t>(a.shape(0));
    return Matrix(n, std::vector<Complex>(a.data(), a.data() + n * n));
}

ComplexArray to_array(const Matrix &m) {
    const auto n = static_cast<py::ssize_t>(m.dim());
    ComplexArray out(std::vector<py::ssize_t>{n, n});
    std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
    return out;
}

ComplexArray to_array(const Vector &v) {
    ComplexArray out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

DensityMatrix to_state(const ComplexArray &a) { return DensityMatrix(to_matrix(a)); }

SwitchMode parse_mode(const std::string &s) {
    if (s == "timesplit" || s == "time_split") return SwitchMode::time_split;
    if (s == "static") return SwitchMode::static_order;
    throw std::invalid_argument("unknown switch mode: " + s);
}

Branch parse_branch(const std::string &s) {
    if (s == "plus") return Branch::plus;
    if (s == "minus") return Branch::minus;
    throw std::invalid_argument("unknown branch: " + s);
}

py::dict report_dict(const WitnessReport &r) {
    py::dict d;
    d["violated"] = r.violated;
    d["t_pair"] = r.t_pair ? py::cast(*r.t_pair) : py::none();
    d["increase"] = r.increase ? py::cast(*r.increase) : py::none();
    d["tolerance"] = r.tolerance;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum switch of time-dependent channels";

    py::register_exception<PostSelectionError>(m, "PostSelectionError", PyExc_RuntimeError);

    py::enum_<ChannelKind>(m, "ChannelKind")
        .value("phase_damping", ChannelKind::phase_damping)
        .value("depolarizing", ChannelKind::depolarizing)
        .value("amplitude_damping", ChannelKind::amplitude_damping)
        .value("unitary", ChannelKind::unitary)
        .value("global_hamiltonian", ChannelKind::global_hamiltonian);

    py::class_<ChannelFamily>(m, "ChannelFamily")
        .def_readonly("kind", &ChannelFamily::kind)
        .def_readonly("gamma", &ChannelFamily::gamma)
        .def_static("phase_damping", &ChannelFamily::phase_damping, py::arg("gamma"))
        .def_static("depolarizing", &ChannelFamily::depolarizing, py::arg("gamma"))
        .def_static("amplitude_damping", &ChannelFamily::amplitude_damping, py::arg("gamma"))
        .def_static(
            "unitary",
            [](const ComplexArray &generator, double rate) {
                return ChannelFamily::unitary(to_matrix(generator), rate);
            },
            py::arg("generator"), py::arg("rate"))
        .def_static("identity", &ChannelFamily::identity)
        .def("__repr__", [](const ChannelFamily &f) {
            return "ChannelFamily(" + to_string(f.kind) + ", gamma=" + format_real(f.gamma) + ")";
        });

    m.def(
        "kraus",
        [](const ChannelFamily &f, double t1, double t2) {
            const auto ch = make_channel(f, t1, t2);
            std::vector<ComplexArray> out;
            for (const auto &k : ch.kraus()) out.push_back(to_array(k));
            return out;
        },
        py::arg("family"), py::arg("t1"), py::arg("t2"), "Kraus operators of a family over [t1, t2].");

    m.def(
        "apply_channel",
        [](const ChannelFamily &f, double t1, double t2, const ComplexArray &rho) {
            return to_array(apply_channel(make_channel(f, t1, t2), to_state(rho)).matrix());
        },
        py::arg("family"), py::arg("t1"), py::arg("t2"), py::arg("rho"));

    m.def(
        "trace_distance",
        [](const ComplexArray &a, const ComplexArray &b) { return trace_distance(to_state(a), to_state(b)); },
        py::arg("a"), py::arg("b"));

    m.def(
        "helstrom_error",
        [](double p1, const ComplexArray &a, const ComplexArray &b) {
            return helstrom_error(p1, to_state(a), to_state(b));
        },
        py::arg("p1"), py::arg("rho1"), py::arg("rho2"));

    m.def(
        "apply_cqs",
        [](const ChannelFamily &first, const ChannelFamily &second, const ComplexArray &rho, double t_start,
           double split, double t_end, const std::string &mode, const std::string &branch,
           std::optional<ComplexArray> control) {
            SwitchConfig cfg;
            cfg.mode = parse_mode(mode);
            cfg.branch = parse_branch(branch);
            cfg.t_start = t_start;
            cfg.split = split;
            cfg.t_end = t_end;
            if (control) cfg.control = to_state(*control);
            const auto out = apply_cqs(cfg, first, second, to_state(rho));
            return py::make_tuple(to_array(out.state.matrix()), out.prob);
        },
        py::arg("first"), py::arg("second"), py::arg("rho"), py::arg("t_start"), py::arg("split"),
        py::arg("t_end"), py::arg("mode") = "timesplit", py::arg("branch") = "plus",
        py::arg("control") = py::none(),
        "Switched output state and post-selection probability.");

    m.def(
        "commutativity_defect",
        [](const ChannelFamily &first, const ChannelFamily &second, double t_max) {
            const auto r = commutativity_defect(first, second, midpoint_grid(t_max));
            py::dict d;
            d["max_defect"] = r.max_defect;
            d["worst_triple"] = py::make_tuple(r.worst_triple.t1, r.worst_triple.s, r.worst_triple.t2);
            d["worst_pair"] = r.worst_pair;
            return d;
        },
        py::arg("first"), py::arg("second"), py::arg("t_max"));

    m.def(
        "certify_cp_divisibility",
        [](const ChannelFamily &first, const ChannelFamily &second, double t_max, double tol) {
            return certify_cp_divisibility(first, second, midpoint_grid(t_max), tol).divisible;
        },
        py::arg("first"), py::arg("second"), py::arg("t_max"), py::arg("tol") = 1e-12);

    m.def(
        "uqs_outputs",
        [](const ComplexArray &order_12, const ComplexArray &order_21) {
            const auto out = uqs_outputs({to_state(order_12), to_state(order_21)});
            py::dict d;
            d["rho_f1"] = to_array(out.rho_f1.matrix());
            d["rho_f2"] = to_array(out.rho_f2.matrix());
            d["chi"] = to_array(out.basis.chi);
            d["chi_perp"] = to_array(out.basis.chi_perp);
            d["f_value"] = out.basis.f_value;
            return d;
        },
        py::arg("order_12"), py::arg("order_21"));

    m.def(
        "evolve_reduced",
        [](const ComplexArray &rho, double j1, double j2, double t1, double t2, bool refresh) {
            const auto schedule = InteractionSchedule::two_stage(SeHamiltonian::xx_coupled(1, j1),
                                                                 SeHamiltonian::xx_coupled(1, j2), t1, t2);
            const auto env = DensityMatrix::pure(ket::zero());
            const auto out = refresh ? evolve_reduced_refreshed(schedule, to_state(rho), env)
                                     : evolve_reduced(schedule, to_state(rho), env);
            return to_array(out.matrix());
        },
        py::arg("rho"), py::arg("j1"), py::arg("j2"), py::arg("t1"), py::arg("t2"), py::arg("refresh") = false,
        "Qubit coupled with strength j1 on [0, t1], then j2 on [t1, t2], environment starting in |0>.");

    m.def(
        "scan_monotonicity",
        [](std::vector<double> times, std::vector<double> distances, double tol) {
            return report_dict(scan_monotonicity({std::move(times), std::move(distances)}, tol));
        },
        py::arg("times"), py::arg("distances"), py::arg("tol") = kAnalyticWitnessTolerance);

    m.def(
        "run_experiment",
        [](const std::string &name, double gamma1, double gamma2, double noise_p, int t_steps, int theta_steps,
           std::optional<double> t_max, std::optional<std::string> mode, const std::string &branch) {
            ExperimentConfig cfg;
            cfg.experiment = parse_experiment(name);
            cfg.gamma1 = gamma1;
            cfg.gamma2 = gamma2;
            cfg.noise_p = noise_p;
            cfg.t_steps = t_steps;
            cfg.theta_steps = theta_steps;
            cfg.t_max = t_max;
            if (mode) cfg.switch_mode = parse_mode(*mode);
            cfg.branch = parse_branch(branch);
            return run_experiment(cfg).render();
        },
        py::arg("name"), py::arg("gamma1") = 1.0, py::arg("gamma2") = 5.0, py::arg("noise_p") = 0.5,
        py::arg("t_steps") = 500, py::arg("theta_steps") = 500, py::arg("t_max") = py::none(),
        py::arg("mode") = py::none(), py::arg("branch") = "plus", "CSV text of one experiment.");
}
