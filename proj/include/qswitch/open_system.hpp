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


#ifndef QSWITCH_OPEN_SYSTEM_HPP
#define QSWITCH_OPEN_SYSTEM_HPP

#include <vector>

#include "qswitch/channels.hpp"

namespace qswitch {

// A qubit system coupled to a single qubit environment. Joint operators are
// ordered system (x) environment; hbar = 1 and times are in units of hbar/h.

struct SeHamiltonian {
    double h = 1;
    double j = 0;
    Matrix mat = Matrix(4);

    /// h sz (x) I + h I (x) sz + j sx (x) sx. Throws unless h > 0.
    static SeHamiltonian xx_coupled(double h, double j);
};

struct Segment {
    SeHamiltonian hamiltonian;
    double t_start = 0;
    double t_end = 0;
};

/// Piecewise-constant interaction. Segments must start at 0, be contiguous and
/// have non-decreasing times.
class InteractionSchedule {
   public:
    InteractionSchedule() = default;
    /// Throws std::invalid_argument when the segments are not contiguous from 0.
    explicit InteractionSchedule(std::vector<Segment> segments);

    /// Two segments: `first` on [0, t1], `second` on [t1, t2].
    static InteractionSchedule two_stage(const SeHamiltonian &first, const SeHamiltonian &second, double t1,
                                         double t2);

    const std::vector<Segment> &segments() const { return segments_; }
    bool empty() const { return segments_.empty(); }

   private:
    std::vector<Segment> segments_;
};

struct FixedInputs {
    DensityMatrix sigma1;
    DensityMatrix sigma2;
    DensityMatrix rho_env;

    /// sigma1 with diagonal (1 +- 1/sqrt 2)/2 and off-diagonal 1/(2 sqrt 2),
    /// sigma2 = |+><+|, environment |0><0|.
    static FixedInputs standard();
};

/// exp(-i H (t_b - t_a)). Throws std::invalid_argument if t_b < t_a.
Matrix se_unitary(const SeHamiltonian &ham, double t_a, double t_b);

/// Product of the segment unitaries, latest leftmost.
Matrix schedule_unitary(const InteractionSchedule &schedule);

/// U (rho_sys (x) rho_env) U^dagger for the whole schedule.
Matrix evolve_global(const InteractionSchedule &schedule, const DensityMatrix &rho_sys, const DensityMatrix &rho_env);

/// Reduced system state after the schedule. The same environment is carried
/// through every segment, so later segments generally act on a correlated
/// joint state.
DensityMatrix evolve_reduced(const InteractionSchedule &schedule, const DensityMatrix &rho_sys,
                             const DensityMatrix &rho_env);

/// Variant that discards the environment after each segment and couples the
/// system to a fresh copy of rho_env. Equal to composing the per-segment
/// CPTP maps.
DensityMatrix evolve_reduced_refreshed(const InteractionSchedule &schedule, const DensityMatrix &rho_sys,
                                       const DensityMatrix &rho_env);

/// Tr_E[U(t, 0) (rho_sys (x) rho_env) U(t, 0)^dagger] for each time. Times must
/// be non-negative and increasing.
std::vector<DensityMatrix> reduced_map_trajectory(const SeHamiltonian &ham, const DensityMatrix &rho_env,
                                                  const DensityMatrix &rho_sys, const std::vector<double> &times);

}  // namespace qswitch

#endif
