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

#ifndef QSWITCH_SWITCH_CQS_HPP
#define QSWITCH_SWITCH_CQS_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "qswitch/channels.hpp"

namespace qswitch {

// Conventional (Kraus-level) quantum switch of two channels with a qubit
// control. Composite operators are ordered system (x) control. In the |0>
// branch the second channel acts first; in the |1> branch the first channel
// acts first.

enum class SwitchMode {
    /// Each channel contributes its [t_start, split] map to the early slot and
    /// its [split, t_end] map to the late slot.
    time_split,
    /// Each channel acts over the whole [t_start, t_end] interval, once per
    /// branch, in the two opposite orders.
    static_order,
};

enum class Branch { plus, minus };

/// How the Kraus index of one channel is shared between its two slots.
enum class KrausIndexing {
    /// One index per channel, reused in both slots.
    shared,
    /// Independent indices per slot, rescaled by 1/sqrt(n1 * n2) so the
    /// switch stays trace preserving. Only for comparison with `shared`.
    independent,
};

class PostSelectionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Post-selection probabilities below this are treated as impossible.
inline constexpr double kMinPostSelectionProbability = 1e-14;

struct SwitchConfig {
    SwitchMode mode = SwitchMode::time_split;
    DensityMatrix control = DensityMatrix::pure(ket::plus());
    Branch branch = Branch::plus;
    double t_start = 0;
    double split = 0;
    double t_end = 0;
    KrausIndexing indexing = KrausIndexing::shared;

    /// Throws std::invalid_argument unless 0 <= t_start <= split <= t_end
    /// and the control is a qubit state.
    void validate() const;
};

struct SwitchOutcome {
    DensityMatrix state;
    double prob;
};

/// The four slot channels feeding the switch.
struct SwitchSlots {
    KrausChannel first_late;
    KrausChannel first_early;
    KrausChannel second_late;
    KrausChannel second_early;
};

/// Instantiates the slot channels for `cfg` and pads each channel's two slots
/// to a common Kraus count.
SwitchSlots switch_slots(const SwitchConfig &cfg, const ChannelFamily &first, const ChannelFamily &second);

/// W_ij = F_i(late) S_j(early) (x) |0><0| + S_j(late) F_i(early) (x) |1><1|
/// over i in the first channel's family and j in the second's.
///
/// Throws std::invalid_argument if a channel's two slots have different Kraus
/// counts or the system dimensions differ.
std::vector<Matrix> build_switch_kraus(const KrausChannel &first_late, const KrausChannel &first_early,
                                       const KrausChannel &second_late, const KrausChannel &second_early,
                                       KrausIndexing indexing = KrausIndexing::shared);

/// sum_k W_k (rho (x) control) W_k^dagger, before any projection.
Matrix switch_action(const std::vector<Matrix> &w, const DensityMatrix &rho, const DensityMatrix &control);

/// Projects the control of a system (x) control operator onto |+> or |->.
/// Returns the unnormalized system block.
Matrix project_control(const Matrix &joint, Branch branch);

/// Switch the slot channels, post-select the control and renormalize.
/// Throws PostSelectionError when the branch probability is below 1e-14.
SwitchOutcome apply_switch(const SwitchSlots &slots, const DensityMatrix &rho, const DensityMatrix &control,
                           Branch branch, KrausIndexing indexing = KrausIndexing::shared);

SwitchOutcome apply_cqs(const SwitchConfig &cfg, const ChannelFamily &first, const ChannelFamily &second,
                        const DensityMatrix &rho);

/// Unnormalized |+>-branch map over [t1, t2] split at s with control |+>:
/// (1/4) sum_ij (A + B) rho (A + B)^dagger where A = S_j(t2,s) F_i(s,t1) and
/// B = F_i(t2,s) S_j(s,t1). Its trace drops below 1 when the Kraus
/// operators fail to commute across the split.
Matrix sigma_interval_map(const ChannelFamily &first, const ChannelFamily &second, double t1, double s, double t2,
                          const Matrix &rho);

/// Sixteen-index two-stage map for t2 >= s2 >= t1 >= s1 >= 0:
/// (1/4) sum_ijmn (L1 + L2) rho (L1 + L2)^dagger with
/// L1 = S_n(t2,s2) F_m(s2,t1) S_j(t1,s1) F_i(s1,0) and
/// L2 = F_m(t2,s2) S_n(s2,t1) F_i(t1,s1) S_j(s1,0).
Matrix sigma_two_stage(const ChannelFamily &first, const ChannelFamily &second, double t2, double t1, double s2,
                       double s1, const Matrix &rho);

struct GridTriple {
    double t1;
    double s;
    double t2;
};

struct CommutativityReport {
    double max_defect = 0;
    GridTriple worst_triple{};
    std::pair<std::size_t, std::size_t> worst_pair{};
};

/// Largest trace norm of Y_ij = S_j(t2,s) F_i(s,t1) - F_i(t2,s) S_j(s,t1)
/// over the grid and all index pairs. Zero on a grid certifies that the
/// switched dynamics composes across every sampled split.
CommutativityReport commutativity_defect(const ChannelFamily &first, const ChannelFamily &second,
                                         const std::vector<GridTriple> &grid);

/// 27 ordered triples in [0, t_max] with the split at the interval midpoint:
/// t1 in {0, t_max/6, t_max/3}, t2 - t1 in {k * 2 t_max / 27 : k = 1..9}.
std::vector<GridTriple> midpoint_grid(double t_max);

}  // namespace qswitch

#endif
