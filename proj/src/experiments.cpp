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


#include "qswitch/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qswitch/open_system.hpp"
#include "qswitch/switch_uqs.hpp"

namespace qswitch {

namespace {

struct NamedExperiment {
    Experiment value;
    const char *name;
};

constexpr NamedExperiment kExperiments[] = {
    {Experiment::fig2, "fig2"},         {Experiment::fig3, "fig3"},         {Experiment::fig4, "fig4"},
    {Experiment::fig5, "fig5"},         {Experiment::fig6, "fig6"},         {Experiment::pdc_cert, "pdc_cert"},
    {Experiment::adc_cert, "adc_cert"}, {Experiment::hx_pind, "hx_pind"}, {Experiment::certificates, "certificates"},
};

ChannelFamily noise_family(ChannelKind kind, double gamma) {
    switch (kind) {
        case ChannelKind::phase_damping:
            return ChannelFamily::phase_damping(gamma);
        case ChannelKind::depolarizing:
            return ChannelFamily::depolarizing(gamma);
        case ChannelKind::amplitude_damping:
            return ChannelFamily::amplitude_damping(gamma);
        default:
            throw std::invalid_argument("noise_family: not a noise kind");
    }
}

std::string short_name(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::phase_damping:
            return "PDC";
        case ChannelKind::depolarizing:
            return "DC";
        case ChannelKind::amplitude_damping:
            return "ADC";
        default:
            return to_string(kind);
    }
}

std::string branch_name(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

std::string mode_name(SwitchMode m) { return m == SwitchMode::static_order ? "static" : "timesplit"; }

// Post-selected output for one input; nullopt when the branch is unreachable.
std::optional<DensityMatrix> switched(const SwitchConfig &cfg, const ChannelFamily &a, const ChannelFamily &b,
                                      const DensityMatrix &rho) {
    try {
        return apply_cqs(cfg, a, b, rho).state;
    } catch (const PostSelectionError &) {
        return std::nullopt;
    }
}

std::optional<DensityMatrix> switched(const SwitchSlots &slots, const DensityMatrix &rho, Branch branch) {
    try {
        return apply_switch(slots, rho, DensityMatrix::pure(ket::plus()), branch).state;
    } catch (const PostSelectionError &) {
        return std::nullopt;
    }
}

void note_skipped(CsvTable &table, std::size_t skipped) {
    if (skipped > 0)
        table.comments.push_back("skipped_rows," + std::to_string(skipped) + ",post-selection probability below " +
                                 format_real(kMinPostSelectionProbability));
}

Trajectory positive_times(const std::vector<double> &times, const std::vector<double> &values) {
    Trajectory traj;
    for (std::size_t k = 0; k < times.size(); ++k)
        if (times[k] > 0) {
            traj.times.push_back(times[k]);
            traj.distances.push_back(values[k]);
        }
    return traj;
}

void add_witness(CsvTable &table, const std::string &curve, const std::vector<double> &times,
                 const std::vector<double> &values, double tol) {
    const Trajectory traj = positive_times(times, values);
    if (traj.times.size() < 2) return;
    table.comments.push_back(witness_comment(curve, scan_monotonicity(traj, tol)));
}

void add_witness_header(CsvTable &table) {
    table.comments.push_back("witness,curve,violated,t_a,t_b,increase,tolerance");
}

Matrix sy_rotation(double theta) { return hermitian_exp(pauli::y(), -theta); }

// Intervals of consecutive theta samples on which `column` is strictly the
// smallest of the three error columns.
std::string minimum_intervals(const CsvTable &table, std::size_t column) {
    std::ostringstream out;
    bool open = false;
    double start = 0;
    double last = 0;
    for (const auto &row : table.rows) {
        const double theta = std::get<double>(row[0]);
        const double v = std::get<double>(row[column]);
        bool smallest = true;
        for (std::size_t c = 1; c < row.size(); ++c)
            if (c != column && !(v < std::get<double>(row[c]) - 1e-12)) smallest = false;
        if (smallest && !open) {
            open = true;
            start = theta;
        }
        if (!smallest && open) {
            open = false;
            out << ",[" << format_real(start) << ";" << format_real(last) << "]";
        }
        last = theta;
    }
    if (open) out << ",[" << format_real(start) << ";" << format_real(last) << "]";
    return out.str();
}

}  // namespace

std::string to_string(Experiment e) {
    for (const auto &entry : kExperiments)
        if (entry.value == e) return entry.name;
    throw std::invalid_argument("unknown experiment");
}

Experiment parse_experiment(const std::string &name) {
    for (const auto &entry : kExperiments)
        if (name == entry.name) return entry.value;
    throw std::invalid_argument("unknown experiment: " + name);
}

double ExperimentConfig::resolved_t_max() const {
    if (t_max) return *t_max;
    return experiment == Experiment::fig6 || experiment == Experiment::hx_pind ? 10.0 : 3.0;
}

SwitchMode ExperimentConfig::resolved_switch_mode() const {
    if (switch_mode) return *switch_mode;
    return experiment == Experiment::fig5 ? SwitchMode::static_order : SwitchMode::time_split;
}

void ExperimentConfig::validate() const {
    if (!(gamma1 >= 0) || !std::isfinite(gamma1) || !(gamma2 >= 0) || !std::isfinite(gamma2))
        throw std::invalid_argument("gamma1 and gamma2 must be finite and non-negative");
    if (!(noise_p >= 0 && noise_p <= 1)) throw std::invalid_argument("noise-p must lie in [0, 1]");
    if (theta_steps < 2 || t_steps < 2) throw std::invalid_argument("step counts must be at least 2");
    const double tm = resolved_t_max();
    if (!(tm > 0) || !std::isfinite(tm)) throw std::invalid_argument("t-max must be positive");
}

void CsvTable::add_row(std::vector<CsvCell> row) {
    if (row.size() != header.size()) throw std::invalid_argument("CsvTable: row width differs from header");
    rows.push_back(std::move(row));
}

std::string format_real(double x) {
    if (x == 0) x = 0;  // drop the sign of negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string CsvTable::render() const {
    std::string out;
    auto cell_text = [](const CsvCell &c) {
        return std::holds_alternative<double>(c) ? format_real(std::get<double>(c)) : std::get<std::string>(c);
    };
    for (std::size_t k = 0; k < header.size(); ++k) out += (k ? "," : "") + header[k];
    out += '\n';
    for (const auto &row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) out += (k ? "," : "") + cell_text(row[k]);
        out += '\n';
    }
    for (const auto &c : comments) out += "# " + c + '\n';
    return out;
}

std::string witness_comment(const std::string &curve, const WitnessReport &report) {
    std::string line = "witness," + curve + "," + (report.violated ? "true" : "false") + ",";
    if (report.t_pair) line += format_real(report.t_pair->first) + "," + format_real(report.t_pair->second);
    else line += ",";
    line += ",";
    if (report.increase) line += format_real(*report.increase);
    return line + "," + format_real(report.tolerance);
}

std::vector<double> uniform_grid(double t_max, int steps) {
    if (steps < 2) throw std::invalid_argument("uniform_grid: need at least two points");
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) grid[k] = t_max * k / (steps - 1);
    return grid;
}

CsvTable run_fig2_3_4(const ExperimentConfig &cfg) {
    ChannelKind partner;
    switch (cfg.experiment) {
        case Experiment::fig2:
            partner = ChannelKind::depolarizing;
            break;
        case Experiment::fig3:
            partner = ChannelKind::amplitude_damping;
            break;
        case Experiment::fig4:
            partner = ChannelKind::phase_damping;
            break;
        default:
            throw std::invalid_argument("run_fig2_3_4: experiment must be fig2, fig3 or fig4");
    }
    const ChannelFamily dc = ChannelFamily::depolarizing(cfg.gamma1);
    const ChannelFamily equal = noise_family(partner, cfg.gamma1);
    const ChannelFamily unequal = noise_family(partner, cfg.gamma2);
    const DensityMatrix rho1 = DensityMatrix::pure(ket::zero());
    const DensityMatrix rho2 = DensityMatrix::pure(ket::one());

    CsvTable table;
    table.header = {"t", "D_equal_rates", "D_unequal_rates"};
    std::vector<double> times;
    std::vector<double> d_equal;
    std::vector<double> d_unequal;
    std::size_t skipped = 0;
    for (double t : uniform_grid(cfg.resolved_t_max(), cfg.t_steps)) {
        SwitchConfig sc;
        sc.mode = cfg.resolved_switch_mode();
        sc.branch = cfg.branch;
        sc.t_start = 0;
        sc.split = t;
        sc.t_end = 2 * t;
        const auto a1 = switched(sc, dc, equal, rho1);
        const auto a2 = switched(sc, dc, equal, rho2);
        const auto b1 = switched(sc, dc, unequal, rho1);
        const auto b2 = switched(sc, dc, unequal, rho2);
        if (!a1 || !a2 || !b1 || !b2) {
            ++skipped;
            continue;
        }
        times.push_back(t);
        d_equal.push_back(trace_distance(*a1, *a2));
        d_unequal.push_back(trace_distance(*b1, *b2));
        table.add_row({t, d_equal.back(), d_unequal.back()});
    }
    table.comments.push_back("pair,DC+" + short_name(partner) + ",gamma1," + format_real(cfg.gamma1) + ",gamma2," +
                             format_real(cfg.gamma2) + ",mode," + mode_name(cfg.resolved_switch_mode()) +
                             ",branch," + branch_name(cfg.branch));
    note_skipped(table, skipped);
    add_witness_header(table);
    add_witness(table, "D_equal_rates", times, d_equal, kAnalyticWitnessTolerance);
    add_witness(table, "D_unequal_rates", times, d_unequal, kAnalyticWitnessTolerance);
    return table;
}

CsvTable run_fig5(const ExperimentConfig &cfg) {
    const double p = cfg.noise_p;
    const SwitchMode mode = cfg.resolved_switch_mode();
    const KrausChannel pdc = make_channel(ChannelKind::phase_damping, NoiseStrength(p));
    const KrausChannel pdc_half = make_channel(ChannelKind::phase_damping, NoiseStrength(1 - std::sqrt(1 - p)));
    const DensityMatrix rho = DensityMatrix::pure(ket::plus());
    const DensityMatrix rho2 = apply_channel(pdc, rho);
    const auto lambda_map = [&](const Matrix &m) { return apply_kraus(pdc.kraus(), m); };

    CsvTable table;
    table.header = {"theta", "p_err_dco", "p_err_cqs", "p_err_uqs"};
    std::size_t skipped = 0;
    for (double theta : uniform_grid(std::numbers::pi, cfg.theta_steps)) {
        const Matrix u = sy_rotation(theta);
        const auto u_map = [&](const Matrix &m) { return sandwich(u, m); };

        const DensityMatrix dco(u_map(rho2.matrix()));

        SwitchSlots slots{pdc, pdc, KrausChannel({u}), KrausChannel({u})};
        if (mode == SwitchMode::time_split) {
            const KrausChannel half({sy_rotation(theta / 2)});
            slots = {pdc_half, pdc_half, half, half};
        }
        const auto cqs = switched(slots, rho, cfg.branch);
        if (!cqs) {
            ++skipped;
            continue;
        }

        const CausalOrderPair pair = causal_order_states(
            [&](const Matrix &m) { return u_map(lambda_map(m)); }, [&](const Matrix &m) { return lambda_map(u_map(m)); },
            rho);
        const UqsOutput uqs = uqs_outputs(pair);

        table.add_row({theta, helstrom_error(0.5, dco, rho2), helstrom_error(0.5, *cqs, rho2),
                       helstrom_error(0.5, uqs.rho_f1, rho2)});
    }
    table.comments.push_back("noise_p," + format_real(p) + ",mode," + mode_name(mode) + ",branch," +
                             branch_name(cfg.branch));
    note_skipped(table, skipped);
    table.comments.push_back("reference_crossovers,1.01314,2.12846");
    table.comments.push_back("p_err_uqs_strict_minimum" + minimum_intervals(table, 3));
    return table;
}

CsvTable run_fig6(const ExperimentConfig &cfg) {
    const FixedInputs in = FixedInputs::standard();
    const SeHamiltonian h1 = SeHamiltonian::xx_coupled(1, 0.5);
    const SeHamiltonian h2 = SeHamiltonian::xx_coupled(1, 1);

    CsvTable table;
    table.header = {"t", "D_sigma_f"};
    std::vector<double> times;
    std::vector<double> values;
    for (double t : uniform_grid(cfg.resolved_t_max(), cfg.t_steps)) {
        const auto h1_last = InteractionSchedule::two_stage(h2, h1, t, 2 * t);
        const auto h2_last = InteractionSchedule::two_stage(h1, h2, t, 2 * t);
        auto rebuilt = [&](const DensityMatrix &sigma) {
            const CausalOrderPair pair = causal_order_states(
                [&](const Matrix &m) { return evolve_reduced(h1_last, DensityMatrix(m), in.rho_env).matrix(); },
                [&](const Matrix &m) { return evolve_reduced(h2_last, DensityMatrix(m), in.rho_env).matrix(); },
                sigma);
            return uqs_outputs(pair).rho_f1;
        };
        const double d = trace_distance(rebuilt(in.sigma1), rebuilt(in.sigma2));
        times.push_back(t);
        values.push_back(d);
        table.add_row({t, d});
    }
    add_witness_header(table);
    add_witness(table, "D_sigma_f", times, values, kOptimizerWitnessTolerance);
    return table;
}

CsvTable run_certificates(const ExperimentConfig &cfg) {
    using K = ChannelKind;
    std::vector<std::pair<K, K>> pairs;
    switch (cfg.experiment) {
        case Experiment::pdc_cert:
            pairs = {{K::phase_damping, K::phase_damping}};
            break;
        case Experiment::adc_cert:
            pairs = {{K::amplitude_damping, K::amplitude_damping}};
            break;
        case Experiment::certificates:
            pairs = {{K::phase_damping, K::phase_damping},
                     {K::amplitude_damping, K::amplitude_damping},
                     {K::depolarizing, K::depolarizing},
                     {K::depolarizing, K::amplitude_damping},
                     {K::depolarizing, K::phase_damping}};
            break;
        default:
            throw std::invalid_argument("run_certificates: not a certificate experiment");
    }
    const auto grid = midpoint_grid(cfg.resolved_t_max());
    CsvTable table;
    table.header = {"pair", "gamma1", "gamma2", "max_defect", "worst_t1", "worst_s", "worst_t2", "verdict"};
    for (const auto &[a, b] : pairs) {
        const CpCertificate cert =
            certify_cp_divisibility(noise_family(a, cfg.gamma1), noise_family(b, cfg.gamma2), grid);
        const GridTriple &w = cert.report.worst_triple;
        table.add_row({short_name(a) + "+" + short_name(b), cfg.gamma1, cfg.gamma2, cert.report.max_defect, w.t1, w.s,
                       w.t2, std::string(cert.divisible ? "cp_divisible" : "cp_indivisible")});
    }
    table.comments.push_back("grid,midpoint,triples," + std::to_string(grid.size()) + ",t_max," +
                             format_real(cfg.resolved_t_max()) + ",tolerance,1e-12");
    return table;
}

CsvTable run_hx_pind(const ExperimentConfig &cfg) {
    const FixedInputs in = FixedInputs::standard();
    const SeHamiltonian hams[] = {SeHamiltonian::xx_coupled(1, 0.5), SeHamiltonian::xx_coupled(1, 1)};
    const std::vector<double> times = uniform_grid(cfg.resolved_t_max(), cfg.t_steps);

    std::vector<double> curves[2];
    for (int k = 0; k < 2; ++k) {
        const auto s1 = reduced_map_trajectory(hams[k], in.rho_env, in.sigma1, times);
        const auto s2 = reduced_map_trajectory(hams[k], in.rho_env, in.sigma2, times);
        for (std::size_t n = 0; n < times.size(); ++n) curves[k].push_back(trace_distance(s1[n], s2[n]));
    }
    CsvTable table;
    table.header = {"t", "D_H1", "D_H2"};
    for (std::size_t n = 0; n < times.size(); ++n) table.add_row({times[n], curves[0][n], curves[1][n]});
    add_witness_header(table);
    add_witness(table, "D_H1", times, curves[0], kAnalyticWitnessTolerance);
    add_witness(table, "D_H2", times, curves[1], kAnalyticWitnessTolerance);
    return table;
}

CsvTable run_experiment(const ExperimentConfig &cfg) {
    cfg.validate();
    switch (cfg.experiment) {
        case Experiment::fig2:
        case Experiment::fig3:
        case Experiment::fig4:
            return run_fig2_3_4(cfg);
        case Experiment::fig5:
            return run_fig5(cfg);
        case Experiment::fig6:
            return run_fig6(cfg);
        case Experiment::pdc_cert:
        case Experiment::adc_cert:
        case Experiment::certificates:
            return run_certificates(cfg);
        case Experiment::hx_pind:
            return run_hx_pind(cfg);
    }
    throw std::invalid_argument("unknown experiment");
}

}  // namespace qswitch
