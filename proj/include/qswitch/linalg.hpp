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

#ifndef QSWITCH_LINALG_HPP
#define QSWITCH_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace qswitch {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

/// Dense square complex matrix stored row-major.
///
/// Sized for the small operators this library deals with (qubit states,
/// Kraus operators, two-qubit Hamiltonians, system (x) control blocks).
class Matrix {
   public:
    /// Zero matrix of the given dimension. `dim` must be at least 1.
    explicit Matrix(std::size_t dim);
    Matrix(std::size_t dim, std::vector<Complex> entries);
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(std::size_t dim);
    static Matrix diagonal(std::span<const Complex> values);

    std::size_t dim() const { return dim_; }
    std::span<const Complex> entries() const { return entries_; }

    Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    Complex &operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

    Matrix adjoint() const;
    Complex trace() const;
    bool is_finite() const;

    Matrix &operator+=(const Matrix &other);
    Matrix &operator-=(const Matrix &other);
    Matrix &operator*=(Complex scale);

    bool operator==(const Matrix &other) const = default;

   private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

Matrix operator+(Matrix a, const Matrix &b);
Matrix operator-(Matrix a, const Matrix &b);
Matrix operator*(const Matrix &a, const Matrix &b);
Matrix operator*(Complex scale, Matrix a);
Matrix operator*(Matrix a, Complex scale);

/// a * rho * a^dagger
Matrix sandwich(const Matrix &a, const Matrix &rho);

/// |a><b|
Matrix outer(const Vector &a, const Vector &b);
/// <a|b>, conjugate-linear in the first argument.
Complex inner(const Vector &a, const Vector &b);
Vector apply(const Matrix &a, const Vector &v);
double norm(const Vector &v);

double max_abs_diff(const Matrix &a, const Matrix &b);
/// Largest entrywise |a - a^dagger|.
double hermiticity_defect(const Matrix &a);

/// Kronecker product; the first factor's index varies slowest.
Matrix tensor(const Matrix &a, const Matrix &b);

enum class Subsystem { first, second };

/// Traces out `traced` of a bipartite operator with factor dimensions `dims`.
Matrix partial_trace(const Matrix &rho, Subsystem traced, std::pair<std::size_t, std::size_t> dims);

struct EigenDecomposition {
    std::vector<double> values;   // descending
    std::vector<Vector> vectors;  // vectors[k] pairs with values[k]
};

/// Maximum |a - a^dagger| accepted by the Hermitian routines.
inline constexpr double kHermitianTolerance = 1e-10;

/// Spectral decomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Sweeps visit pairs (p, q) with p < q in row-major order and stop once the
/// off-diagonal Frobenius mass drops below 1e-14 or after 64 sweeps. Each
/// eigenvector is phase-fixed so that its largest-magnitude component (the
/// first one, on near-ties) is real and non-negative. Vectors inside a
/// degenerate eigenspace are whatever the rotation sequence produces.
///
/// Throws std::invalid_argument when `a` is not Hermitian to 1e-10.
EigenDecomposition hermitian_eig(const Matrix &a);

/// exp(i * phase * h) for Hermitian h, assembled from its eigendecomposition.
Matrix hermitian_exp(const Matrix &h, double phase);

/// Sum of singular values, tr sqrt(a^dagger a).
double trace_norm(const Matrix &a);

namespace pauli {
Matrix identity();
Matrix x();
Matrix y();
Matrix z();
}  // namespace pauli

namespace ket {
Vector zero();
Vector one();
Vector plus();
Vector minus();
}  // namespace ket

}  // namespace qswitch

#endif
