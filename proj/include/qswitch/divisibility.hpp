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


#ifndef QSWITCH_DIVISIBILITY_HPP
#define QSWITCH_DIVISIBILITY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qswitch/switch_cqs.hpp"

namespace qswitch {

/// Default witness tolerance for trajectories of analytic channels.
inline constexpr double kAnalyticWitnessTolerance = 1e-6;
/// Default witness tolerance for trajectories that pass through the basis
/// optimizer.
inline constexpr double kOptimizerWitnessTolerance = 1e-4;

struct Trajectory {
    std::vector<double> times;
    std::vector<double> distances;

    /// Throws std::invalid_argument on length mismatch, non-increasing times
    /// or non-finite distances.
    void validate() const;
};

/// Largest trace-distance revival found on a trajectory.
struct WitnessReport {
    bool violated = false;
    std::optional<std::pair<double, double>> t_pair;
    std::optional<double> increase;
    double tolerance = 0;
};

/// Scans every pair b > a for distances[b] - distances[a]. The maximizing pair
/// is reported whenever its increase is positive (ties go to the earliest t_a,
/// then the earliest t_b); `violated` iff that increase exceeds `tol`.
///
/// Throws std::invalid_argument for fewer than two samples or tol <= 0.
WitnessReport scan_monotonicity(const Trajectory &traj, double tol = kAnalyticWitnessTolerance);

struct CpCertificate {
    bool divisible = false;
    CommutativityReport report;
};

/// Divisible iff the commutativity defect over `grid` is at most `tol`.
CpCertificate certify_cp_divisibility(const ChannelFamily &first, const ChannelFamily &second,
                                      const std::vector<GridTriple> &grid, double tol = 1e-12);

}  // namespace qswitch

#endif
