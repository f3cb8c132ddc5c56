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


#include "qswitch/open_system.hpp"

#include <cmath>
#include <stdexcept>

namespace qswitch {

namespace {

DensityMatrix reduce(const Matrix &joint, std::size_t env_dim) {
    Matrix sys = partial_trace(joint, Subsystem::second, {joint.dim() / env_dim, env_dim});
    return DensityMatrix(0.5 * (sys + sys.adjoint()));
}

}  // namespace

SeHamiltonian SeHamiltonian::xx_coupled(double h, double j) {
    if (!(h > 0) || !std::isfinite(h)) throw std::invalid_argument("SeHamiltonian: h must be positive");
    if (!std::isfinite(j)) throw std::invalid_argument("SeHamiltonian: j must be finite");
    const Matrix mat = h * tensor(pauli::z(), pauli::identity()) + h * tensor(pauli::identity(), pauli::z()) +
                       j * tensor(pauli::x(), pauli::x());
    return {h, j, mat};
}

InteractionSchedule::InteractionSchedule(std::vector<Segment> segments) : segments_(std::move(segments)) {
    double cursor = 0;
    for (const Segment &s : segments_) {
        if (s.t_start != cursor) throw std::invalid_argument("InteractionSchedule: segments must be contiguous from 0");
        if (!(s.t_end >= s.t_start)) throw std::invalid_argument("InteractionSchedule: segment ends before it starts");
        if (s.hamiltonian.mat.dim() != 4) throw std::invalid_argument("InteractionSchedule: Hamiltonian must be 4x4");
        cursor = s.t_end;
    }
}

InteractionSchedule InteractionSchedule::two_stage(const SeHamiltonian &first, const SeHamiltonian &second,
                                                   double t1, double t2) {
    return InteractionSchedule({{first, 0, t1}, {second, t1, t2}});
}

FixedInputs FixedInputs::standard() {
    const double r = 1 / std::sqrt(2.0);
    Matrix s1{{0.5 * (1 + r), 0.5 * r}, {0.5 * r, 0.5 * (1 - r)}};
    return {DensityMatrix(std::move(s1)), DensityMatrix::pure(ket::plus()), DensityMatrix::pure(ket::zero())};
}

Matrix se_unitary(const SeHamiltonian &ham, double t_a, double t_b) {
    if (!(t_b >= t_a)) throw std::invalid_argument("se_unitary: t_b must not precede t_a");
    return hermitian_exp(ham.mat, -(t_b - t_a));
}

Matrix schedule_unitary(const InteractionSchedule &schedule) {
    Matrix u = Matrix::identity(4);
    for (const Segment &s : schedule.segments()) u = se_unitary(s.hamiltonian, s.t_start, s.t_end) * u;
    return u;
}

Matrix evolve_global(const InteractionSchedule &schedule, const DensityMatrix &rho_sys, const DensityMatrix &rho_env) {
    if (rho_sys.dim() != 2 || rho_env.dim() != 2) throw std::invalid_argument("evolve_global: qubit states required");
    return sandwich(schedule_unitary(schedule), tensor(rho_sys.matrix(), rho_env.matrix()));
}

DensityMatrix evolve_reduced(const InteractionSchedule &schedule, const DensityMatrix &rho_sys,
                             const DensityMatrix &rho_env) {
    if (schedule.empty()) return rho_sys;
    return reduce(evolve_global(schedule, rho_sys, rho_env), rho_env.dim());
}

DensityMatrix evolve_reduced_refreshed(const InteractionSchedule &schedule, const DensityMatrix &rho_sys,
                                       const DensityMatrix &rho_env) {
    DensityMatrix rho = rho_sys;
    for (const Segment &s : schedule.segments())
        rho = reduce(sandwich(se_unitary(s.hamiltonian, s.t_start, s.t_end), tensor(rho.matrix(), rho_env.matrix())),
                     rho_env.dim());
    return rho;
}

std::vector<DensityMatrix> reduced_map_trajectory(const SeHamiltonian &ham, const DensityMatrix &rho_env,
                                                  const DensityMatrix &rho_sys, const std::vector<double> &times) {
    std::vector<DensityMatrix> out;
    out.reserve(times.size());
    double previous = 0;
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (!(times[k] >= 0) || (k > 0 && !(times[k] > previous)))
            throw std::invalid_argument("reduced_map_trajectory: times must be non-negative and increasing");
        previous = times[k];
        out.push_back(evolve_reduced(InteractionSchedule({{ham, 0, times[k]}}), rho_sys, rho_env));
    }
    return out;
}

}  // namespace qswitch
