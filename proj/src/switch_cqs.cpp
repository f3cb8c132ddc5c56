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


#include "qswitch/switch_cqs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qswitch {

namespace {

Vector branch_vector(Branch branch) { return branch == Branch::plus ? ket::plus() : ket::minus(); }

Matrix projector(std::size_t index) {
    Matrix p(2);
    p(index, index) = 1;
    return p;
}

std::vector<Matrix> padded_kraus(const KrausChannel &ch, std::size_t count) { return ch.padded(count).kraus(); }

// Both slots of one channel padded to the larger Kraus count.
std::pair<std::vector<Matrix>, std::vector<Matrix>> slot_pair(const ChannelFamily &fam, double a, double b,
                                                              double c) {
    const KrausChannel early = make_channel(fam, a, b);
    const KrausChannel late = make_channel(fam, b, c);
    const std::size_t n = std::max(early.size(), late.size());
    return {padded_kraus(late, n), padded_kraus(early, n)};
}

void require_order(bool ok, const char *what) {
    if (!ok) throw std::invalid_argument(std::string("time ordering violated: ") + what);
}

}  // namespace

void SwitchConfig::validate() const {
    if (!(t_start >= 0)) throw std::invalid_argument("switch: t_start must be non-negative");
    if (!(t_end >= t_start)) throw std::invalid_argument("switch: t_end must not precede t_start");
    if (mode == SwitchMode::time_split && !(split >= t_start && split <= t_end))
        throw std::invalid_argument("switch: split must lie in [t_start, t_end]");
    if (control.dim() != 2) throw std::invalid_argument("switch: control must be a qubit state");
}

SwitchSlots switch_slots(const SwitchConfig &cfg, const ChannelFamily &first, const ChannelFamily &second) {
    cfg.validate();
    if (cfg.mode == SwitchMode::static_order) {
        const KrausChannel f = make_channel(first, cfg.t_start, cfg.t_end);
        const KrausChannel s = make_channel(second, cfg.t_start, cfg.t_end);
        return {f, f, s, s};
    }
    auto [f_late, f_early] = slot_pair(first, cfg.t_start, cfg.split, cfg.t_end);
    auto [s_late, s_early] = slot_pair(second, cfg.t_start, cfg.split, cfg.t_end);
    return {KrausChannel(std::move(f_late)), KrausChannel(std::move(f_early)), KrausChannel(std::move(s_late)),
            KrausChannel(std::move(s_early))};
}

std::vector<Matrix> build_switch_kraus(const KrausChannel &first_late, const KrausChannel &first_early,
                                       const KrausChannel &second_late, const KrausChannel &second_early,
                                       KrausIndexing indexing) {
    const std::size_t d = first_late.dim();
    if (first_early.dim() != d || second_late.dim() != d || second_early.dim() != d)
        throw std::invalid_argument("build_switch_kraus: system dimensions differ");
    if (first_late.size() != first_early.size() || second_late.size() != second_early.size())
        throw std::invalid_argument("build_switch_kraus: Kraus count differs between a channel's two slots");

    const Matrix p0 = projector(0);
    const Matrix p1 = projector(1);
    const auto &fl = first_late.kraus();
    const auto &fe = first_early.kraus();
    const auto &sl = second_late.kraus();
    const auto &se = second_early.kraus();
    const std::size_t n1 = fl.size();
    const std::size_t n2 = sl.size();

    std::vector<Matrix> w;
    if (indexing == KrausIndexing::shared) {
        w.reserve(n1 * n2);
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n2; ++j)
                w.push_back(tensor(fl[i] * se[j], p0) + tensor(sl[j] * fe[i], p1));
        return w;
    }

    // Independent indices: (i, j) drive the |0> branch, (k, l) the |1> branch.
    const Complex scale = 1.0 / std::sqrt(static_cast<double>(n1 * n2));
    w.reserve(n1 * n1 * n2 * n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t k = 0; k < n1; ++k)
                for (std::size_t l = 0; l < n2; ++l)
                    w.push_back(scale * (tensor(fl[i] * se[j], p0) + tensor(sl[l] * fe[k], p1)));
    return w;
}

Matrix switch_action(const std::vector<Matrix> &w, const DensityMatrix &rho, const DensityMatrix &control) {
    return apply_kraus(w, tensor(rho.matrix(), control.matrix()));
}

Matrix project_control(const Matrix &joint, Branch branch) {
    if (joint.dim() % 2 != 0) throw std::invalid_argument("project_control: odd joint dimension");
    const Vector v = branch_vector(branch);
    const std::size_t d = joint.dim() / 2;
    Matrix out(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            Complex acc = 0;
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b) acc += std::conj(v[a]) * joint(2 * r + a, 2 * c + b) * v[b];
            out(r, c) = acc;
        }
    return out;
}

SwitchOutcome apply_switch(const SwitchSlots &slots, const DensityMatrix &rho, const DensityMatrix &control,
                           Branch branch, KrausIndexing indexing) {
    const auto w =
        build_switch_kraus(slots.first_late, slots.first_early, slots.second_late, slots.second_early, indexing);
    const Matrix block = project_control(switch_action(w, rho, control), branch);
    const double prob = block.trace().real();
    if (!(prob >= kMinPostSelectionProbability))
        throw PostSelectionError("post-selection impossible: branch probability " + std::to_string(prob));
    Matrix state = (1.0 / prob) * block;
    // Restore exact Hermiticity lost to rounding.
    state = 0.5 * (state + state.adjoint());
    return {DensityMatrix(std::move(state)), prob};
}

SwitchOutcome apply_cqs(const SwitchConfig &cfg, const ChannelFamily &first, const ChannelFamily &second,
                        const DensityMatrix &rho) {
    return apply_switch(switch_slots(cfg, first, second), rho, cfg.control, cfg.branch, cfg.indexing);
}

Matrix sigma_interval_map(const ChannelFamily &first, const ChannelFamily &second, double t1, double s, double t2,
                          const Matrix &rho) {
    require_order(t1 >= 0 && s >= t1 && t2 >= s, "need t2 >= s >= t1 >= 0");
    const auto [fl, fe] = slot_pair(first, t1, s, t2);
    const auto [sl, se] = slot_pair(second, t1, s, t2);
    Matrix out(rho.dim());
    for (std::size_t i = 0; i < fl.size(); ++i)
        for (std::size_t j = 0; j < sl.size(); ++j) out += sandwich(sl[j] * fe[i] + fl[i] * se[j], rho);
    return 0.25 * out;
}

Matrix sigma_two_stage(const ChannelFamily &first, const ChannelFamily &second, double t2, double t1, double s2,
                       double s1, const Matrix &rho) {
    require_order(s1 >= 0 && t1 >= s1 && s2 >= t1 && t2 >= s2, "need t2 >= s2 >= t1 >= s1 >= 0");
    const auto [f_b, f_a] = slot_pair(first, 0, s1, t1);
    const auto [s_b, s_a] = slot_pair(second, 0, s1, t1);
    const auto [f_d, f_c] = slot_pair(first, t1, s2, t2);
    const auto [s_d, s_c] = slot_pair(second, t1, s2, t2);
    Matrix out(rho.dim());
    for (std::size_t i = 0; i < f_a.size(); ++i)
        for (std::size_t j = 0; j < s_a.size(); ++j) {
            const Matrix inner1 = s_b[j] * f_a[i];
            const Matrix inner2 = f_b[i] * s_a[j];
            for (std::size_t m = 0; m < f_c.size(); ++m)
                for (std::size_t n = 0; n < s_c.size(); ++n) {
                    const Matrix l1 = s_d[n] * f_c[m] * inner1;
                    const Matrix l2 = f_d[m] * s_c[n] * inner2;
                    out += sandwich(l1 + l2, rho);
                }
        }
    return 0.25 * out;
}

CommutativityReport commutativity_defect(const ChannelFamily &first, const ChannelFamily &second,
                                         const std::vector<GridTriple> &grid) {
    CommutativityReport report;
    for (const GridTriple &g : grid) {
        require_order(g.t1 >= 0 && g.s >= g.t1 && g.t2 >= g.s, "grid triple must satisfy t2 >= s >= t1 >= 0");
        const auto [fl, fe] = slot_pair(first, g.t1, g.s, g.t2);
        const auto [sl, se] = slot_pair(second, g.t1, g.s, g.t2);
        for (std::size_t i = 0; i < fl.size(); ++i)
            for (std::size_t j = 0; j < sl.size(); ++j) {
                const double defect = trace_norm(sl[j] * fe[i] - fl[i] * se[j]);
                if (defect > report.max_defect) {
                    report.max_defect = defect;
                    report.worst_triple = g;
                    report.worst_pair = {i, j};
                }
            }
    }
    return report;
}

std::vector<GridTriple> midpoint_grid(double t_max) {
    if (!(t_max > 0)) throw std::invalid_argument("midpoint_grid: t_max must be positive");
    std::vector<GridTriple> grid;
    grid.reserve(27);
    for (int a = 0; a < 3; ++a) {
        const double t1 = a * t_max / 6;
        for (int k = 1; k <= 9; ++k) {
            const double d = k * 2 * t_max / 27;
            grid.push_back({t1, t1 + d / 2, t1 + d});
        }
    }
    return grid;
}

}  // namespace qswitch
