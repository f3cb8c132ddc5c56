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


// Command-line front end: one subcommand per experiment, CSV to --out or stdout.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "qswitch/experiments.hpp"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;

struct Flags {
    double gamma1 = 1;
    double gamma2 = 5;
    double noise_p = 0.5;
    std::optional<double> t_max;
    int t_steps = 500;
    int theta_steps = 500;
    std::optional<qswitch::SwitchMode> switch_mode;
    qswitch::Branch branch = qswitch::Branch::plus;
    std::string out;
};

void add_flags(CLI::App &sub, Flags &f) {
    const std::map<std::string, qswitch::SwitchMode> modes{{"static", qswitch::SwitchMode::static_order},
                                                           {"timesplit", qswitch::SwitchMode::time_split}};
    const std::map<std::string, qswitch::Branch> branches{{"plus", qswitch::Branch::plus},
                                                          {"minus", qswitch::Branch::minus}};
    sub.add_option("--gamma1", f.gamma1, "Rate of the first channel")->capture_default_str();
    sub.add_option("--gamma2", f.gamma2, "Rate of the second channel in the unequal-rate case")->capture_default_str();
    sub.add_option("--noise-p", f.noise_p, "Phase damping strength for fig5")->capture_default_str();
    sub.add_option("--t-max", f.t_max, "End of the time grid (default 3, or 10 for fig6 and hx_pind)");
    sub.add_option("--t-steps", f.t_steps, "Points on the time grid")->capture_default_str();
    sub.add_option("--theta-steps", f.theta_steps, "Points on the theta grid")->capture_default_str();
    sub.add_option("--switch-mode", f.switch_mode, "static or timesplit")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    sub.add_option("--branch", f.branch, "Control projection: plus or minus")
        ->transform(CLI::CheckedTransformer(branches, CLI::ignore_case));
    sub.add_option("--out", f.out, "Output CSV path (stdout when omitted)");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum switch experiments"};
    app.require_subcommand(1);
    Flags flags;
    const char *names[] = {"fig2", "fig3", "fig4", "fig5", "fig6", "pdc_cert", "adc_cert", "hx_pind", "certificates"};
    for (const char *name : names) add_flags(*app.add_subcommand(name, std::string("Run ") + name), flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    qswitch::ExperimentConfig cfg;
    cfg.experiment = qswitch::parse_experiment(app.get_subcommands().front()->get_name());
    cfg.gamma1 = flags.gamma1;
    cfg.gamma2 = flags.gamma2;
    cfg.noise_p = flags.noise_p;
    cfg.t_max = flags.t_max;
    cfg.t_steps = flags.t_steps;
    cfg.theta_steps = flags.theta_steps;
    cfg.switch_mode = flags.switch_mode;
    cfg.branch = flags.branch;

    std::string csv;
    try {
        csv = qswitch::run_experiment(cfg).render();
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    if (flags.out.empty()) {
        std::cout << csv;
        std::cout.flush();
        return std::cout ? 0 : kExitIo;
    }
    std::ofstream file(flags.out, std::ios::binary | std::ios::trunc);
    if (file) file << csv;
    file.close();
    if (!file) {
        std::cerr << "error: cannot write " << flags.out << '\n';
        return kExitIo;
    }
    return 0;
}
