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


#include "qswitch/switch_uqs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace qswitch {

namespace {

constexpr int kThetaGrid = 64;
constexpr int kPhiGrid = 128;
constexpr int kRefineRounds = 40;
constexpr int kMovesPerRound = 256;
constexpr double kAxisTieTolerance = 1e-6;

DensityMatrix checked_state(const Matrix &m, const char *which) {
    try {
        return DensityMatrix(m);
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(std::string("causal order ") + which + " output invalid: " + e.what());
    }
}

double half_sum(const Vector &chi, const Vector &perp, const EigenDecomposition &eig) {
    double acc = 0;
    for (const Vector &v : eig.vectors) acc += std::abs(inner(chi, v)) + std::abs(inner(perp, v));
    return acc;
}

bool lex_greater(const std::array<double, 3> &a, const std::array<double, 3> &b) {
    for (std::size_t k = 0; k < 3; ++k) {
        if (a[k] > b[k] + kAxisTieTolerance) return true;
        if (a[k] < b[k] - kAxisTieTolerance) return false;
    }
    return false;
}

void normalize(std::array<double, 3> &n) {
    const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    for (double &x : n) x /= len;
}

std::array<double, 3> cross(const std::array<double, 3> &a, const std::array<double, 3> &b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Orthonormal pair spanning the tangent plane at the unit vector n.
std::pair<std::array<double, 3>, std::array<double, 3>> tangent_frame(const std::array<double, 3> &n) {
    const std::array<double, 3> ref = std::abs(n[2]) < 0.9 ? std::array<double, 3>{0, 0, 1}
                                                             : std::array<double, 3>{1, 0, 0};
    std::array<double, 3> e1 = cross(n, ref);
    normalize(e1);
    return {e1, cross(n, e1)};
}

Vector from_axis(const std::array<double, 3> &n) {
    const double z = std::clamp(n[2], -1.0, 1.0);
    return bloch_state(std::acos(z), std::atan2(n[1], n[0]));
}

Matrix spectral_rebuild(const std::vector<double> &values, const OptimalBasis &basis) {
    return values[0] * outer(basis.chi, basis.chi) + values[1] * outer(basis.chi_perp, basis.chi_perp);
}

}  // namespace

CausalOrderPair causal_order_states(const StateMap &evolve_12, const StateMap &evolve_21, const DensityMatrix &rho) {
    return {checked_state(evolve_12(rho.matrix()), "12"), checked_state(evolve_21(rho.matrix()), "21")};
}

Vector orthogonal_complement(const Vector &chi) {
    if (chi.size() != 2) throw std::invalid_argument("orthogonal_complement: qubit vector required");
    return {-std::conj(chi[1]), std::conj(chi[0])};
}

double overlap_functional(const Vector &chi, const EigenDecomposition &lambda, const EigenDecomposition &mu) {
    const Vector perp = orthogonal_complement(chi);
    return half_sum(chi, perp, lambda) + half_sum(chi, perp, mu);
}

Vector bloch_state(double theta, double phi) {
    return {std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)};
}

std::array<double, 3> bloch_axis(const Vector &chi) {
    const Complex c = std::conj(chi[0]) * chi[1];
    return {2 * c.real(), 2 * c.imag(), std::norm(chi[0]) - std::norm(chi[1])};
}

OptimalBasis optimize_basis(const EigenDecomposition &lambda, const EigenDecomposition &mu) {
    if (lambda.vectors.size() != 2 || mu.vectors.size() != 2)
        throw std::invalid_argument("optimize_basis: qubit spectra required");

    // |<chi|v>| = sqrt((1 + n.a) / 2) for Bloch axes n of chi and a of v, and
    // chi_perp has axis -n, so F only needs the four eigenvector axes.
    std::array<std::array<double, 3>, 4> axes;
    for (std::size_t k = 0; k < 2; ++k) {
        axes[k] = bloch_axis(lambda.vectors[k]);
        axes[k + 2] = bloch_axis(mu.vectors[k]);
    }
    auto f = [&](const std::array<double, 3> &n) {
        double acc = 0;
        for (const auto &a : axes) {
            const double c = std::clamp(n[0] * a[0] + n[1] * a[1] + n[2] * a[2], -1.0, 1.0);
            acc += std::sqrt(0.5 * (1 + c)) + std::sqrt(0.5 * (1 - c));
        }
        return acc;
    };

    const double pi = std::numbers::pi;
    std::array<double, 3> axis{0, 0, 1};
    double best = f(axis);
    for (int k = 0; k < kThetaGrid; ++k)
        for (int l = 0; l < kPhiGrid; ++l) {
            const double theta = pi * k / kThetaGrid;
            const double phi = 2 * pi * l / kPhiGrid;
            const std::array<double, 3> n{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                                          std::cos(theta)};
            const double value = f(n);
            if (value > best) {
                best = value;
                axis = n;
            }
        }

    // Refine in the tangent plane of the Bloch sphere so the poles are not
    // special.
    double step = pi / kThetaGrid;
    for (int round = 0; round < kRefineRounds; ++round) {
        for (int move = 0; move < kMovesPerRound; ++move) {
            const auto [e1, e2] = tangent_frame(axis);
            std::array<double, 3> cand_axis = axis;
            double cand = best;
            for (int a = -1; a <= 1; ++a)
                for (int b = -1; b <= 1; ++b) {
                    if (a == 0 && b == 0) continue;
                    std::array<double, 3> n;
                    for (std::size_t k = 0; k < 3; ++k) n[k] = axis[k] + step * (a * e1[k] + b * e2[k]);
                    normalize(n);
                    const double value = f(n);
                    if (value > cand) {
                        cand = value;
                        cand_axis = n;
                    }
                }
            if (cand <= best) break;
            best = cand;
            axis = cand_axis;
        }
        step /= 2;
    }

    const std::array<double, 3> flipped{-axis[0], -axis[1], -axis[2]};
    if (lex_greater(flipped, axis)) axis = flipped;
    OptimalBasis basis;
    basis.chi = from_axis(axis);
    basis.chi_perp = orthogonal_complement(basis.chi);
    basis.f_value = overlap_functional(basis.chi, lambda, mu);
    return basis;
}

UqsOutput uqs_outputs(const CausalOrderPair &pair) {
    if (pair.order_12.dim() != 2 || pair.order_21.dim() != 2)
        throw std::invalid_argument("uqs_outputs: qubit states required");
    const EigenDecomposition lambda = hermitian_eig(pair.order_12.matrix());
    const EigenDecomposition mu = hermitian_eig(pair.order_21.matrix());
    OptimalBasis basis = optimize_basis(lambda, mu);
    DensityMatrix f1(spectral_rebuild(lambda.values, basis));
    DensityMatrix f2(spectral_rebuild(mu.values, basis));
    return {std::move(f1), std::move(f2), std::move(basis)};
}

}  // namespace qswitch
