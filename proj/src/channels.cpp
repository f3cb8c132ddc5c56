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

#include "qswitch/channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qswitch {

namespace {

void require_dims(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        std::ostringstream msg;
        msg << what << ": dimension mismatch (" << a << " vs " << b << ")";
        throw std::invalid_argument(msg.str());
    }
}

/// Kraus operators of a noise kind, given survival = exp(-gamma * duration)
/// and strength = 1 - survival (passed separately to keep precision near 0).
std::vector<Matrix> noise_kraus(ChannelKind kind, double survival, double strength) {
    switch (kind) {
        case ChannelKind::phase_damping:
            return {std::sqrt(survival) * pauli::identity(), std::sqrt(strength) * pauli::z()};
        case ChannelKind::depolarizing: {
            double side = std::sqrt(strength) / 2;
            return {std::sqrt(1 + 3 * survival) / 2 * pauli::identity(), side * pauli::x(), side * pauli::y(),
                    side * pauli::z()};
        }
        case ChannelKind::amplitude_damping:
            return {Matrix{{1, 0}, {0, std::sqrt(survival)}}, Matrix{{0, std::sqrt(strength)}, {0, 0}}};
        default:
            throw std::invalid_argument("make_channel: " + to_string(kind) + " is not a noise kind");
    }
}

std::string family_label(const ChannelFamily &family) {
    std::ostringstream out;
    out << to_string(family.kind) << "(gamma=" << family.gamma << ")";
    return out.str();
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix mat) : mat_(std::move(mat)) {
    if (!mat_.is_finite()) {
        throw std::invalid_argument("DensityMatrix: non-finite entries");
    }
    double herm = hermiticity_defect(mat_);
    if (herm > kStateTolerance) {
        std::ostringstream msg;
        msg << "DensityMatrix: not Hermitian (max |rho - rho^dagger| = " << herm << ")";
        throw std::invalid_argument(msg.str());
    }
    Complex tr = mat_.trace();
    if (std::abs(tr - 1.0) > kStateTolerance) {
        std::ostringstream msg;
        msg << "DensityMatrix: trace is " << tr.real() << (tr.imag() >= 0 ? "+" : "") << tr.imag()
            << "i, expected 1";
        throw std::invalid_argument(msg.str());
    }
    double smallest = hermitian_eig(mat_).values.back();
    if (smallest < -kStateTolerance) {
        std::ostringstream msg;
        msg << "DensityMatrix: negative eigenvalue " << smallest;
        throw std::invalid_argument(msg.str());
    }
}

DensityMatrix DensityMatrix::pure(const Vector &psi) {
    double n = norm(psi);
    if (!(n > 0)) {
        throw std::invalid_argument("DensityMatrix::pure: zero vector");
    }
    return DensityMatrix(outer(psi, psi) * (1 / (n * n)));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    return DensityMatrix(Matrix::identity(dim) * (1.0 / static_cast<double>(dim)));
}

KrausChannel::KrausChannel(std::vector<Matrix> kraus, std::string label, Interval interval)
    : kraus_(std::move(kraus)), label_(std::move(label)), interval_(interval) {
    if (kraus_.empty()) {
        throw std::invalid_argument("KrausChannel: empty Kraus family");
    }
    for (const auto &k : kraus_) {
        require_dims(k.dim(), kraus_.front().dim(), "KrausChannel");
        if (!k.is_finite()) {
            throw std::invalid_argument("KrausChannel: non-finite Kraus operator");
        }
    }
    if (interval_.end < interval_.start) {
        throw std::invalid_argument("KrausChannel: interval ends before it starts");
    }
    double defect = completeness_defect(kraus_);
    if (defect > kStateTolerance) {
        std::ostringstream msg;
        msg << "KrausChannel: completeness violated (max |sum K^dagger K - I| = " << defect << ")";
        throw std::invalid_argument(msg.str());
    }
}

KrausChannel KrausChannel::identity(std::size_t dim) {
    return KrausChannel({Matrix::identity(dim)}, "identity");
}

KrausChannel KrausChannel::padded(std::size_t count) const {
    if (count <= kraus_.size()) {
        return *this;
    }
    std::vector<Matrix> ops = kraus_;
    ops.resize(count, Matrix(dim()));
    return KrausChannel(std::move(ops), label_, interval_);
}

double completeness_defect(const std::vector<Matrix> &kraus) {
    if (kraus.empty()) {
        return 1;
    }
    Matrix total(kraus.front().dim());
    for (const auto &k : kraus) {
        total += k.adjoint() * k;
    }
    return max_abs_diff(total, Matrix::identity(total.dim()));
}

ChannelFamily ChannelFamily::phase_damping(double gamma) {
    return {ChannelKind::phase_damping, gamma, std::nullopt};
}

ChannelFamily ChannelFamily::depolarizing(double gamma) {
    return {ChannelKind::depolarizing, gamma, std::nullopt};
}

ChannelFamily ChannelFamily::amplitude_damping(double gamma) {
    return {ChannelKind::amplitude_damping, gamma, std::nullopt};
}

ChannelFamily ChannelFamily::unitary(Matrix generator, double rate) {
    return {ChannelKind::unitary, rate, std::move(generator)};
}

ChannelFamily ChannelFamily::global_hamiltonian(Matrix hamiltonian) {
    return {ChannelKind::global_hamiltonian, 1, std::move(hamiltonian)};
}

ChannelFamily ChannelFamily::identity() {
    return unitary(Matrix(2), 0);
}

std::string to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::phase_damping:
            return "phase_damping";
        case ChannelKind::depolarizing:
            return "depolarizing";
        case ChannelKind::amplitude_damping:
            return "amplitude_damping";
        case ChannelKind::unitary:
            return "unitary";
        case ChannelKind::global_hamiltonian:
            return "global_hamiltonian";
    }
    return "unknown";
}

NoiseStrength::NoiseStrength(double p) : p_(p) {
    if (!(p >= 0 && p <= 1)) {
        std::ostringstream msg;
        msg << "NoiseStrength: p = " << p << " is outside [0, 1]";
        throw std::invalid_argument(msg.str());
    }
}

NoiseStrength NoiseStrength::from_rate(double gamma, double duration) {
    return NoiseStrength(-std::expm1(-gamma * duration));
}

KrausChannel make_channel(const ChannelFamily &family, double t1, double t2) {
    if (!(t1 >= 0) || !(t2 >= t1)) {
        std::ostringstream msg;
        msg << "make_channel: need 0 <= t1 <= t2, got t1 = " << t1 << ", t2 = " << t2;
        throw std::invalid_argument(msg.str());
    }
    if (!(family.gamma >= 0) || !std::isfinite(family.gamma)) {
        std::ostringstream msg;
        msg << "make_channel: gamma must be finite and non-negative, got " << family.gamma;
        throw std::invalid_argument(msg.str());
    }
    double duration = t2 - t1;
    Interval interval{t1, t2};

    switch (family.kind) {
        case ChannelKind::phase_damping:
        case ChannelKind::depolarizing:
        case ChannelKind::amplitude_damping: {
            double rate_time = family.gamma * duration;
            return KrausChannel(noise_kraus(family.kind, std::exp(-rate_time), -std::expm1(-rate_time)),
                                family_label(family), interval);
        }
        case ChannelKind::unitary: {
            if (!family.payload) {
                throw std::invalid_argument("make_channel: unitary family needs a generator");
            }
            return KrausChannel({hermitian_exp(*family.payload, -family.gamma * duration)}, family_label(family),
                                interval);
        }
        case ChannelKind::global_hamiltonian: {
            if (!family.payload || family.payload->dim() % 2 != 0) {
                throw std::invalid_argument(
                    "make_channel: global_hamiltonian family needs a system (x) qubit Hamiltonian");
            }
            if (t1 != 0) {
                throw std::invalid_argument(
                    "make_channel: a global Hamiltonian only has a Kraus form from t = 0; intermediate maps act "
                    "on system-environment correlations (use evolve_reduced)");
            }
            // K_k = (I (x) <k|) U (I (x) |0>), environment starting in |0>.
            Matrix u = hermitian_exp(*family.payload, -t2);
            std::size_t n = u.dim() / 2;
            std::vector<Matrix> ops;
            for (std::size_t k = 0; k < 2; k++) {
                Matrix op(n);
                for (std::size_t i = 0; i < n; i++) {
                    for (std::size_t j = 0; j < n; j++) {
                        op(i, j) = u(i * 2 + k, j * 2);
                    }
                }
                ops.push_back(std::move(op));
            }
            return KrausChannel(std::move(ops), "global_hamiltonian", interval);
        }
    }
    throw std::invalid_argument("make_channel: unknown channel kind");
}

KrausChannel make_channel(ChannelKind kind, NoiseStrength strength) {
    double p = strength.value();
    std::ostringstream label;
    label << to_string(kind) << "(p=" << p << ")";
    return KrausChannel(noise_kraus(kind, 1 - p, p), label.str());
}

Matrix apply_kraus(const std::vector<Matrix> &kraus, const Matrix &rho) {
    Matrix out(rho.dim());
    for (const auto &k : kraus) {
        require_dims(k.dim(), rho.dim(), "apply_kraus");
        out += sandwich(k, rho);
    }
    return out;
}

DensityMatrix apply_channel(const KrausChannel &ch, const DensityMatrix &rho) {
    require_dims(ch.dim(), rho.dim(), "apply_channel");
    return DensityMatrix(apply_kraus(ch.kraus(), rho.matrix()));
}

KrausChannel compose(const KrausChannel &later, const KrausChannel &earlier) {
    require_dims(later.dim(), earlier.dim(), "compose");
    std::vector<Matrix> ops;
    ops.reserve(later.size() * earlier.size());
    for (const auto &l : later.kraus()) {
        for (const auto &k : earlier.kraus()) {
            ops.push_back(l * k);
        }
    }
    return KrausChannel(std::move(ops), later.label() + " . " + earlier.label(),
                        Interval{earlier.interval().start, std::max(earlier.interval().end, later.interval().end)});
}

KrausChannel remix(const KrausChannel &ch, const Matrix &u) {
    require_dims(u.dim(), ch.size(), "remix");
    if (max_abs_diff(u.adjoint() * u, Matrix::identity(u.dim())) > kStateTolerance) {
        throw std::invalid_argument("remix: mixing matrix is not unitary");
    }
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < ch.size(); i++) {
        Matrix op(ch.dim());
        for (std::size_t k = 0; k < ch.size(); k++) {
            op += u(i, k) * ch.kraus()[k];
        }
        ops.push_back(std::move(op));
    }
    return KrausChannel(std::move(ops), ch.label(), ch.interval());
}

Matrix choi_matrix(const KrausChannel &ch) {
    std::size_t n = ch.dim();
    Matrix out(n * n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            Matrix unit(n);
            unit(i, j) = 1;
            out += tensor(unit, apply_kraus(ch.kraus(), unit));
        }
    }
    return out;
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    require_dims(a.dim(), b.dim(), "trace_distance");
    return 0.5 * trace_norm(a.matrix() - b.matrix());
}

double helstrom_error(double p1, const DensityMatrix &rho1, const DensityMatrix &rho2) {
    if (!(p1 >= 0 && p1 <= 1)) {
        throw std::invalid_argument("helstrom_error: prior must lie in [0, 1]");
    }
    require_dims(rho1.dim(), rho2.dim(), "helstrom_error");
    double value = 0.5 - 0.5 * trace_norm(p1 * rho1.matrix() - (1 - p1) * rho2.matrix());
    return std::clamp(value, 0.0, 0.5);
}

}  // namespace qswitch
