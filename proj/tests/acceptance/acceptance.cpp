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


// Acceptance checks. Without arguments every criterion runs; with a number
// only that criterion runs. Prints one PASS/FAIL line per criterion and exits
// non-zero if any selected criterion fails.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "qswitch/divisibility.hpp"
#include "qswitch/experiments.hpp"
#include "qswitch/open_system.hpp"
#include "qswitch/switch_cqs.hpp"
#include "qswitch/switch_uqs.hpp"
#include "random.hpp"

using namespace qswitch;
using qswitch::testing::Rng;
using qswitch::testing::random_state;

namespace {

struct Result {
    bool pass;
    std::string detail;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::vector<ChannelFamily> factory_families(double gamma) {
    return {ChannelFamily::phase_damping(gamma), ChannelFamily::depolarizing(gamma),
            ChannelFamily::amplitude_damping(gamma), ChannelFamily::unitary(pauli::y(), gamma)};
}

double increase_on_positive_times(const std::vector<double> &t, const std::vector<double> &d, double tol) {
    Trajectory traj;
    for (std::size_t k = 0; k < t.size(); ++k)
        if (t[k] > 0) {
            traj.times.push_back(t[k]);
            traj.distances.push_back(d[k]);
        }
    const auto r = scan_monotonicity(traj, tol);
    return r.increase.value_or(0);
}

std::vector<double> column(const CsvTable &t, std::size_t c) {
    std::vector<double> out;
    for (const auto &row : t.rows) out.push_back(std::get<double>(row[c]));
    return out;
}

Result channel_validity() {
    double worst_complete = 0;
    double worst_choi = 0;
    for (double gamma : {0.2, 1.0, 5.0})
        for (const auto &fam : factory_families(gamma))
            for (int k = 0; k <= 30; ++k) {
                const auto ch = make_channel(fam, 0, 0.1 * k);
                worst_complete = std::max(worst_complete, completeness_defect(ch.kraus()));
                worst_choi = std::max(worst_choi, -hermitian_eig(choi_matrix(ch)).values.back());
            }
    return {worst_complete <= 1e-10 && worst_choi <= 1e-10,
            "max completeness defect " + fmt(worst_complete) + ", most negative Choi eigenvalue " + fmt(-worst_choi)};
}

Result commutativity_certificates() {
    const auto grid = midpoint_grid(3);
    const GridTriple one{0, 0.5, 1};
    const double pdc_equal =
        commutativity_defect(ChannelFamily::phase_damping(1), ChannelFamily::phase_damping(1), grid).max_defect;
    const double pdc_unequal =
        commutativity_defect(ChannelFamily::phase_damping(1), ChannelFamily::phase_damping(5), grid).max_defect;
    const double adc =
        commutativity_defect(ChannelFamily::amplitude_damping(1), ChannelFamily::amplitude_damping(1), {one})
            .max_defect;
    const double dc_pdc =
        commutativity_defect(ChannelFamily::depolarizing(1), ChannelFamily::phase_damping(1), {one}).max_defect;
    const bool pass = pdc_equal <= 1e-12 && pdc_unequal <= 1e-12 && adc > 0.05 && dc_pdc > 0.05 &&
                      std::abs(adc - 0.13875193032090527) < 1e-12 && std::abs(dc_pdc - 0.7869386805747332) < 1e-12;
    return {pass, "PDC+PDC " + fmt(std::max(pdc_equal, pdc_unequal)) + " over 27 triples, ADC+ADC " + fmt(adc) +
                      ", DC+PDC " + fmt(dc_pdc)};
}

Result commuting_consistency() {
    struct Pair {
        const char *name;
        ChannelFamily a;
        ChannelFamily b;
    };
    const std::vector<Pair> pairs{
        {"PDC+PDC", ChannelFamily::phase_damping(1), ChannelFamily::phase_damping(1)},
        {"PDC+PDC(5)", ChannelFamily::phase_damping(1), ChannelFamily::phase_damping(5)},
        {"Rz+Rz", ChannelFamily::unitary(pauli::z(), 1), ChannelFamily::unitary(pauli::z(), 2.5)},
        {"PDC+Rz", ChannelFamily::phase_damping(1), ChannelFamily::unitary(pauli::z(), 0.8)},
    };
    const auto grid = midpoint_grid(3);
    Rng rng(2024);
    std::vector<DensityMatrix> states;
    for (int k = 0; k < 20; ++k) states.push_back(random_state(rng, 2));

    double worst_state = 0;
    double worst_prob = 0;
    std::string closure;
    bool closure_ok = true;
    int certified = 0;
    for (const auto &p : pairs) {
        if (commutativity_defect(p.a, p.b, grid).max_defect > 1e-12) continue;
        ++certified;
        double worst_closure = 0;
        for (const auto &g : grid) {
            SwitchConfig cfg;
            cfg.t_start = g.t1;
            cfg.split = g.s;
            cfg.t_end = g.t2;
            const auto plain = compose(make_channel(p.a, g.s, g.t2), make_channel(p.b, g.t1, g.s));
            for (const auto &rho : states) {
                const auto out = apply_cqs(cfg, p.a, p.b, rho);
                worst_state = std::max(worst_state, max_abs_diff(out.state.matrix(), apply_channel(plain, rho).matrix()));
                worst_prob = std::max(worst_prob, std::abs(out.prob - 1));
            }
            // Two midpoint-split stages [0, t1] and [t1, t2] against one
            // midpoint-split stage over [0, t2].
            if (g.t1 <= 0) continue;
            for (const auto &rho : states) {
                const Matrix two = sigma_two_stage(p.a, p.b, g.t2, g.t1, g.s, g.t1 / 2, rho.matrix());
                const Matrix one = sigma_interval_map(p.a, p.b, 0, g.t2 / 2, g.t2, rho.matrix());
                worst_closure = std::max(worst_closure, max_abs_diff(two, one));
            }
        }
        closure += std::string(closure.empty() ? "" : ", ") + p.name + " " + fmt(worst_closure);
        if (worst_closure > 1e-10) closure_ok = false;
    }
    const bool pass = certified == static_cast<int>(pairs.size()) && worst_state <= 1e-10 && worst_prob <= 1e-10 &&
                      closure_ok;
    return {pass, "switch vs composition " + fmt(worst_state) + ", |N - 1| " + fmt(worst_prob) +
                      "; two-stage closure: " + closure};
}

Result figs_2_to_4() {
    std::string detail;
    bool pass = true;
    for (Experiment e : {Experiment::fig2, Experiment::fig3, Experiment::fig4}) {
        ExperimentConfig cfg;
        cfg.experiment = e;
        const CsvTable t = run_experiment(cfg);
        const auto times = column(t, 0);
        for (std::size_t c = 1; c <= 2; ++c) {
            const double inc = increase_on_positive_times(times, column(t, c), kAnalyticWitnessTolerance);
            pass = pass && inc >= 1e-3;
            detail += (detail.empty() ? "" : ", ") + to_string(e) + (c == 1 ? " equal " : " unequal ") + fmt(inc);
        }
        pass = pass && std::abs(column(t, 1)[0] - 1) < 1e-12 && std::abs(column(t, 2)[0] - 1) < 1e-12;
    }
    return {pass, "increases: " + detail};
}

Result hx_indivisibility() {
    ExperimentConfig cfg;
    cfg.experiment = Experiment::hx_pind;
    const CsvTable t = run_experiment(cfg);
    const auto times = column(t, 0);
    const double i1 = increase_on_positive_times(times, column(t, 1), kAnalyticWitnessTolerance);
    const double i2 = increase_on_positive_times(times, column(t, 2), kAnalyticWitnessTolerance);
    return {i1 >= 1e-3 && i2 >= 1e-3, "increases J=0.5: " + fmt(i1) + ", J=1: " + fmt(i2)};
}

Result fig6() {
    ExperimentConfig cfg;
    cfg.experiment = Experiment::fig6;
    const CsvTable t = run_experiment(cfg);
    const double inc = increase_on_positive_times(column(t, 0), column(t, 1), kOptimizerWitnessTolerance);

    // Distance identity of each rebuilt pair along the same trajectory.
    const auto in = FixedInputs::standard();
    const auto h1 = SeHamiltonian::xx_coupled(1, 0.5);
    const auto h2 = SeHamiltonian::xx_coupled(1, 1);
    double worst = 0;
    for (double time : column(t, 0)) {
        const auto h1_last = InteractionSchedule::two_stage(h2, h1, time, 2 * time);
        const auto h2_last = InteractionSchedule::two_stage(h1, h2, time, 2 * time);
        for (const DensityMatrix *sigma : {&in.sigma1, &in.sigma2}) {
            const auto pair = causal_order_states(
                [&](const Matrix &m) { return evolve_reduced(h1_last, DensityMatrix(m), in.rho_env).matrix(); },
                [&](const Matrix &m) { return evolve_reduced(h2_last, DensityMatrix(m), in.rho_env).matrix(); },
                *sigma);
            const auto out = uqs_outputs(pair);
            const double l1 = hermitian_eig(pair.order_12.matrix()).values[0];
            const double m1 = hermitian_eig(pair.order_21.matrix()).values[0];
            worst = std::max(worst, std::abs(trace_distance(out.rho_f1, out.rho_f2) - std::abs(l1 - m1)));
        }
    }
    return {inc >= 1e-3 && worst <= 1e-10, "increase " + fmt(inc) + ", max |D - |l1 - m1|| " + fmt(worst)};
}

Result uqs_optimizer() {
    const double bound = 4 * std::sqrt(2.0);
    Rng rng(77);
    double lo = bound;
    double hi = 0;
    double spectrum = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_state(rng, 2);
        const auto b = random_state(rng, 2);
        const auto out = uqs_outputs({a, b});
        lo = std::min(lo, out.basis.f_value);
        hi = std::max(hi, out.basis.f_value);
        const auto la = hermitian_eig(a.matrix()).values;
        const auto lb = hermitian_eig(b.matrix()).values;
        const auto fa = hermitian_eig(out.rho_f1.matrix()).values;
        const auto fb = hermitian_eig(out.rho_f2.matrix()).values;
        for (std::size_t k = 0; k < 2; ++k)
            spectrum = std::max({spectrum, std::abs(la[k] - fa[k]), std::abs(lb[k] - fb[k])});
    }
    return {lo >= bound - 1e-6 && hi <= bound + 1e-9 && spectrum <= 1e-10,
            "F - 4 sqrt 2 in [" + fmt(lo - bound) + ", " + fmt(hi - bound) + "], spectrum error " + fmt(spectrum)};
}

Result fig5() {
    ExperimentConfig cfg;
    cfg.experiment = Experiment::fig5;
    const CsvTable t = run_experiment(cfg);
    bool in_range = true;
    for (const auto &row : t.rows)
        for (std::size_t c = 1; c < 4; ++c) {
            const double v = std::get<double>(row[c]);
            in_range = in_range && v >= 0 && v <= 0.5;
        }
    double at_zero = 0;
    for (std::size_t c = 1; c < 4; ++c) at_zero = std::max(at_zero, std::abs(std::get<double>(t.rows[0][c]) - 0.5));

    cfg.noise_p = 0.3;
    const CsvTable u = run_experiment(cfg);
    double gap = 0;
    for (const auto &row : u.rows)
        for (std::size_t a = 1; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b)
                gap = std::max(gap, std::abs(std::get<double>(row[a]) - std::get<double>(row[b])));
    return {in_range && at_zero <= 1e-10 && gap > 1e-3 && t.rows.size() == 500,
            "rows " + std::to_string(t.rows.size()) + ", theta=0 deviation " + fmt(at_zero) +
                ", max gap at p=0.3 " + fmt(gap)};
}

Result kraus_independence() {
    Rng rng(99);
    SwitchConfig cfg;
    cfg.t_start = 0;
    cfg.split = 0.4;
    cfg.t_end = 1.0;
    const auto dc = ChannelFamily::depolarizing(1);
    const auto adc = ChannelFamily::amplitude_damping(2);
    const SwitchSlots slots = switch_slots(cfg, dc, adc);
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto rho = random_state(rng, 2);
        const auto base = apply_switch(slots, rho, cfg.control, Branch::plus);
        SwitchSlots first = slots;
        const Matrix u4 = qswitch::testing::random_unitary(rng, 4);
        first.first_late = remix(slots.first_late, u4);
        first.first_early = remix(slots.first_early, u4);
        SwitchSlots second = slots;
        const Matrix u2 = qswitch::testing::random_unitary(rng, 2);
        second.second_late = remix(slots.second_late, u2);
        second.second_early = remix(slots.second_early, u2);
        for (const auto *s : {&first, &second}) {
            const auto out = apply_switch(*s, rho, cfg.control, Branch::plus);
            worst = std::max({worst, max_abs_diff(out.state.matrix(), base.state.matrix()),
                              std::abs(out.prob - base.prob)});
        }
    }
    return {worst < 1e-10, "max output change " + fmt(worst)};
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Result determinism() {
    const auto dir = std::filesystem::temp_directory_path() / ("qswitch_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const char *subcommands[] = {"fig2", "fig3", "fig4", "fig5", "fig6", "pdc_cert", "adc_cert", "hx_pind",
                                 "certificates"};
    std::string failed;
    for (const char *sub : subcommands) {
        std::string runs[2];
        for (int k = 0; k < 2; ++k) {
            const auto path = dir / (std::string(sub) + "_" + std::to_string(k) + ".csv");
            const std::string cmd = std::string("\"") + QSWITCH_CLI_PATH + "\" " + sub + " --out \"" + path.string() + "\"";
            if (std::system(cmd.c_str()) != 0) failed += std::string(" ") + sub + "(exit)";
            runs[k] = slurp(path);
        }
        if (runs[0].empty() || runs[0] != runs[1]) failed += std::string(" ") + sub;
    }
    std::filesystem::remove_all(dir);
    return {failed.empty(), failed.empty() ? "9 subcommands byte-identical across two runs" : "differs:" + failed};
}

}  // namespace

int main(int argc, char **argv) {
    struct Criterion {
        const char *name;
        std::function<Result()> run;
    };
    const std::vector<Criterion> criteria{
        {"channel validity", channel_validity},
        {"commutativity certificates", commutativity_certificates},
        {"commuting switch consistency", commuting_consistency},
        {"switched channel revivals", figs_2_to_4},
        {"coupled environment revivals", hx_indivisibility},
        {"kraus-free switch revivals", fig6},
        {"basis optimizer", uqs_optimizer},
        {"discrimination sweep", fig5},
        {"kraus representation independence", kraus_independence},
        {"cli determinism", determinism},
    };

    std::size_t only = 0;
    if (argc > 1) {
        only = std::strtoul(argv[1], nullptr, 10);
        if (only < 1 || only > criteria.size()) {
            std::fprintf(stderr, "usage: %s [1-%zu]\n", argv[0], criteria.size());
            return 2;
        }
    }

    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        if (only && only != k + 1) continue;
        Result r;
        try {
            r = criteria[k].run();
        } catch (const std::exception &e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %2zu %s: %s\n", r.pass ? "PASS" : "FAIL", k + 1, criteria[k].name, r.detail.c_str());
        if (!r.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
