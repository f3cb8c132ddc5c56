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


#ifndef QSWITCH_EXPERIMENTS_HPP
#define QSWITCH_EXPERIMENTS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qswitch/divisibility.hpp"
#include "qswitch/switch_cqs.hpp"

namespace qswitch {

enum class Experiment { fig2, fig3, fig4, fig5, fig6, pdc_cert, adc_cert, hx_pind, certificates };

std::string to_string(Experiment e);
/// Throws std::invalid_argument for unknown names.
Experiment parse_experiment(const std::string &name);

struct ExperimentConfig {
    Experiment experiment = Experiment::fig2;
    double gamma1 = 1;
    double gamma2 = 5;
    double noise_p = 0.5;
    int theta_steps = 500;
    int t_steps = 500;
    /// Defaults to 10 for fig6 and hx_pind, 3 otherwise.
    std::optional<double> t_max;
    /// Defaults to static_order for fig5, time_split otherwise.
    std::optional<SwitchMode> switch_mode;
    Branch branch = Branch::plus;

    double resolved_t_max() const;
    SwitchMode resolved_switch_mode() const;

    /// Throws std::invalid_argument on out-of-range parameters.
    void validate() const;
};

using CsvCell = std::variant<double, std::string>;

/// Rectangular table rendered as comma-separated text with LF line endings.
/// Reals use 15 significant digits. Comment lines are appended after the rows,
/// each prefixed with "# ".
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<CsvCell>> rows;
    std::vector<std::string> comments;

    /// Throws std::invalid_argument if the row width differs from the header.
    void add_row(std::vector<CsvCell> row);
    std::string render() const;
};

/// "%.15g"
std::string format_real(double x);

/// Comment line "witness,<curve>,<violated>,<t_a>,<t_b>,<increase>,<tolerance>";
/// the pair and increase are empty when no increase was found.
std::string witness_comment(const std::string &curve, const WitnessReport &report);

/// Uniform grid of `steps` points over [0, t_max].
std::vector<double> uniform_grid(double t_max, int steps);

/// Trace distance of the switched outputs for |0><0| and |1><1| under a
/// depolarizing channel switched with the experiment's partner channel
/// (depolarizing, amplitude damping or phase damping for fig2, fig3, fig4), at
/// split t and end 2t. Columns t, D_equal_rates, D_unequal_rates.
CsvTable run_fig2_3_4(const ExperimentConfig &cfg);

/// Helstrom error for telling Lambda(rho) from each of three ways of also
/// applying U(theta) = exp(-i theta sy): definite order, Kraus-level switch
/// and Kraus-free switch. Lambda is phase damping of strength noise_p and
/// rho = |+><+|. Columns theta, p_err_dco, p_err_cqs, p_err_uqs.
CsvTable run_fig5(const ExperimentConfig &cfg);

/// Kraus-free switch of the two coupled-environment dynamics. Columns t,
/// D_sigma_f.
CsvTable run_fig6(const ExperimentConfig &cfg);

/// Commutativity certificates over the midpoint grid on [0, t_max]. One row
/// per channel pair at rates (gamma1, gamma2): pdc_cert and adc_cert emit
/// their single pair, certificates emits all five pairs.
CsvTable run_certificates(const ExperimentConfig &cfg);

/// Trace distance of the two fixed inputs under each single coupled
/// Hamiltonian. Columns t, D_H1, D_H2.
CsvTable run_hx_pind(const ExperimentConfig &cfg);

/// Dispatches on cfg.experiment after validating it.
CsvTable run_experiment(const ExperimentConfig &cfg);

}  // namespace qswitch

#endif
