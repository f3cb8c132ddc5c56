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

#ifndef QSWITCH_CHANNELS_HPP
#define QSWITCH_CHANNELS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qswitch/linalg.hpp"

namespace qswitch {

/// Tolerance used when validating states and channels.
inline constexpr double kStateTolerance = 1e-10;

/// A validated quantum state: Hermitian, unit trace and positive
/// semidefinite, each to 1e-10.
class DensityMatrix {
   public:
    /// Throws std::invalid_argument naming the violated property.
    explicit DensityMatrix(Matrix mat);

    static DensityMatrix pure(const Vector &psi);
    static DensityMatrix maximally_mixed(std::size_t dim);

    const Matrix &matrix() const { return mat_; }
    std::size_t dim() const { return mat_.dim(); }

   private:
    Matrix mat_;
};

struct Interval {
    double start = 0;
    double end = 0;
    double duration() const { return end - start; }
};

/// A CPTP map given by Kraus operators with sum K^dagger K = I to 1e-10.
class KrausChannel {
   public:
    KrausChannel(std::vector<Matrix> kraus, std::string label = {}, Interval interval = {});

    static KrausChannel identity(std::size_t dim);

    const std::vector<Matrix> &kraus() const { return kraus_; }
    const std::string &label() const { return label_; }
    const Interval &interval() const { return interval_; }
    std::size_t dim() const { return kraus_.front().dim(); }
    std::size_t size() const { return kraus_.size(); }

    /// Appends zero operators until the family has `count` members.
    KrausChannel padded(std::size_t count) const;

   private:
    std::vector<Matrix> kraus_;
    std::string label_;
    Interval interval_;
};

/// max |sum K^dagger K - I| entrywise.
double completeness_defect(const std::vector<Matrix> &kraus);

enum class ChannelKind { phase_damping, depolarizing, amplitude_damping, unitary, global_hamiltonian };

/// A time-parametrized channel family.
///
/// The three noise kinds use `gamma` as Lindblad coefficient. A unitary family
/// evolves as exp(-i * gamma * duration * payload) for a Hermitian generator
/// payload. A global_hamiltonian family couples a qubit to a qubit
/// environment prepared in |0>; payload is the joint Hamiltonian.
struct ChannelFamily {
    ChannelKind kind = ChannelKind::phase_damping;
    double gamma = 0;
    std::optional<Matrix> payload;

    static ChannelFamily phase_damping(double gamma);
    static ChannelFamily depolarizing(double gamma);
    static ChannelFamily amplitude_damping(double gamma);
    static ChannelFamily unitary(Matrix generator, double rate);
    static ChannelFamily global_hamiltonian(Matrix hamiltonian);
    static ChannelFamily identity();
};

std::string to_string(ChannelKind kind);

/// Noise strength p = 1 - exp(-gamma * duration), in [0, 1].
class NoiseStrength {
   public:
    explicit NoiseStrength(double p);
    static NoiseStrength from_rate(double gamma, double duration);
    double value() const { return p_; }

   private:
    double p_;
};

/// Kraus family of `family` over the interval [t1, t2].
///
/// The noise kinds are time-homogeneous: only t2 - t1 enters. The
/// global_hamiltonian kind only has a Kraus form from t1 = 0 (later segments
/// act on a correlated system-environment state; see open_system.hpp).
KrausChannel make_channel(const ChannelFamily &family, double t1, double t2);

/// Strength-parametrized form of the three noise kinds.
KrausChannel make_channel(ChannelKind kind, NoiseStrength strength);

/// sum_i K_i rho K_i^dagger without any validation of the result.
Matrix apply_kraus(const std::vector<Matrix> &kraus, const Matrix &rho);

DensityMatrix apply_channel(const KrausChannel &ch, const DensityMatrix &rho);

/// Kraus family {L_i K_j} of "later after earlier".
KrausChannel compose(const KrausChannel &later, const KrausChannel &earlier);

/// Re-expresses a Kraus family as K'_i = sum_k u(i, k) K_k for unitary u.
/// The channel action is unchanged.
KrausChannel remix(const KrausChannel &ch, const Matrix &u);

/// sum_ij |i><j| (x) ch(|i><j|). Positive semidefinite iff ch is CP; its
/// partial trace over the output factor is the identity iff ch is TP.
Matrix choi_matrix(const KrausChannel &ch);

/// D(a, b) = ||a - b||_1 / 2.
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

/// Minimum error probability for discriminating rho1 (prior p1) from rho2
/// (prior 1 - p1).
double helstrom_error(double p1, const DensityMatrix &rho1, const DensityMatrix &rho2);

}  // namespace qswitch

#endif
