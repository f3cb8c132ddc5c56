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


#include "qswitch/divisibility.hpp"

#include <cmath>
#include <stdexcept>

namespace qswitch {

void Trajectory::validate() const {
    if (times.size() != distances.size()) throw std::invalid_argument("Trajectory: length mismatch");
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (!std::isfinite(distances[k])) throw std::invalid_argument("Trajectory: non-finite distance");
        if (k > 0 && !(times[k] > times[k - 1])) throw std::invalid_argument("Trajectory: times must increase");
    }
}

WitnessReport scan_monotonicity(const Trajectory &traj, double tol) {
    traj.validate();
    if (traj.times.size() < 2) throw std::invalid_argument("scan_monotonicity: need at least two samples");
    if (!(tol > 0)) throw std::invalid_argument("scan_monotonicity: tolerance must be positive");

    const auto &d = traj.distances;
    // Running minimum of the prefix gives the best partner for each b in O(n).
    std::size_t argmin = 0;
    double best = 0;
    std::size_t best_a = 0;
    std::size_t best_b = 0;
    for (std::size_t b = 1; b < d.size(); ++b) {
        const double inc = d[b] - d[argmin];
        if (inc > best || (inc == best && best > 0 && argmin < best_a)) {
            best = inc;
            best_a = argmin;
            best_b = b;
        }
        if (d[b] < d[argmin]) argmin = b;
    }

    WitnessReport report;
    report.tolerance = tol;
    if (best > 0) {
        report.t_pair = std::make_pair(traj.times[best_a], traj.times[best_b]);
        report.increase = best;
        report.violated = best > tol;
    }
    return report;
}

CpCertificate certify_cp_divisibility(const ChannelFamily &first, const ChannelFamily &second,
                                      const std::vector<GridTriple> &grid, double tol) {
    CommutativityReport report = commutativity_defect(first, second, grid);
    return {report.max_defect <= tol, report};
}

}  // namespace qswitch
