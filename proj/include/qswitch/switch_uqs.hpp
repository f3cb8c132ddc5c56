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


#ifndef QSWITCH_SWITCH_UQS_HPP
#define QSWITCH_SWITCH_UQS_HPP

#include <array>
#include <functional>

#include "qswitch/channels.hpp"

namespace qswitch {

// Kraus-free switch for qubit dynamics. Only the two causal-order output
// states are needed: both are spectrally decomposed and re-expressed in a
// common basis chosen to maximize the overlap functional below.

/// An opaque state transformer. Output validity is checked by the caller.
using StateMap = std::function<Matrix(const Matrix &)>;

struct CausalOrderPair {
    DensityMatrix order_12;  // first map applied last
    DensityMatrix order_21;  // second map applied last
};

struct OptimalBasis {
    Vector chi;
    Vector chi_perp;
    double f_value = 0;
};

struct UqsOutput {
    DensityMatrix rho_f1;
    DensityMatrix rho_f2;
    OptimalBasis basis;
};

/// order_12 = evolve_12(rho), order_21 = evolve_21(rho). Throws
/// std::invalid_argument naming the offending order if an output is not a
/// valid state.
CausalOrderPair causal_order_states(const StateMap &evolve_12, const StateMap &evolve_21, const DensityMatrix &rho);

/// (-conj(b), conj(a)) for chi = (a, b).
Vector orthogonal_complement(const Vector &chi);

/// sum_i |<chi|l_i>| + |<chi_perp|l_i>| + |<chi|m_i>| + |<chi_perp|m_i>|
/// over the eigenvectors l_i of `lambda` and m_i of `mu`. At most 4 sqrt(2).
double overlap_functional(const Vector &chi, const EigenDecomposition &lambda, const EigenDecomposition &mu);

/// Qubit state with Bloch angles (theta, phi): (cos(theta/2), e^{i phi} sin(theta/2)).
Vector bloch_state(double theta, double phi);

/// Bloch vector (x, y, z) of a unit qubit vector.
std::array<double, 3> bloch_axis(const Vector &chi);

/// Maximizes the overlap functional over qubit bases.
///
/// A 64 x 128 grid over theta = pi k / 64, phi = 2 pi l / 128 is followed by
/// 40 rounds of compass refinement in the tangent plane of the Bloch sphere,
/// with the step halved each round. Of the
/// two Bloch axes +-n describing the same basis, chi takes the
/// lexicographically larger one (components compared to 1e-6), with a real
/// non-negative |0> amplitude.
OptimalBasis optimize_basis(const EigenDecomposition &lambda, const EigenDecomposition &mu);

/// rho_f1 = l_1 |chi><chi| + l_2 |chi_perp><chi_perp| from the descending
/// spectrum of order_12; rho_f2 likewise from order_21.
UqsOutput uqs_outputs(const CausalOrderPair &pair);

}  // namespace qswitch

#endif
