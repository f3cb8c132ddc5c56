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

#include "qswitch/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qswitch {

namespace {

constexpr double kJacobiOffDiagonalTarget = 1e-14;
constexpr int kJacobiMaxSweeps = 64;

void require_same_dim(const Matrix &a, const Matrix &b, const char *what) {
    if (a.dim() != b.dim()) {
        std::ostringstream msg;
        msg << what << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
        throw std::invalid_argument(msg.str());
    }
}

void require_hermitian(const Matrix &a, const char *what) {
    double defect = hermiticity_defect(a);
    if (!(defect <= kHermitianTolerance)) {
        std::ostringstream msg;
        msg << what << ": matrix is not Hermitian (max |a - a^dagger| = " << defect << ")";
        throw std::invalid_argument(msg.str());
    }
}

double off_diagonal_mass(const Matrix &a) {
    double total = 0;
    for (std::size_t r = 0; r < a.dim(); r++) {
        for (std::size_t c = 0; c < a.dim(); c++) {
            if (r != c) {
                total += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(total);
}

void canonicalize_phase(Vector &v) {
    double largest = 0;
    for (const auto &x : v) {
        largest = std::max(largest, std::abs(x));
    }
    for (const auto &x : v) {
        if (std::abs(x) >= largest - 1e-12) {
            Complex rotation = std::conj(x) / std::abs(x);
            for (auto &y : v) {
                y *= rotation;
            }
            return;
        }
    }
}

}  // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) {
        throw std::invalid_argument("Matrix: dimension must be at least 1");
    }
}

Matrix::Matrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) {
        throw std::invalid_argument("Matrix: dimension must be at least 1");
    }
    if (entries_.size() != dim * dim) {
        std::ostringstream msg;
        msg << "Matrix: expected " << dim * dim << " entries for dimension " << dim << ", got " << entries_.size();
        throw std::invalid_argument(msg.str());
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) : Matrix(rows.size()) {
    std::size_t r = 0;
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw std::invalid_argument("Matrix: rows must form a square matrix");
        }
        std::size_t c = 0;
        for (const auto &x : row) {
            (*this)(r, c++) = x;
        }
        r++;
    }
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t k = 0; k < dim; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const Complex> values) {
    Matrix m(values.size());
    for (std::size_t k = 0; k < values.size(); k++) {
        m(k, k) = values[k];
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = 0; c < dim_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex Matrix::trace() const {
    Complex total = 0;
    for (std::size_t k = 0; k < dim_; k++) {
        total += (*this)(k, k);
    }
    return total;
}

bool Matrix::is_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Complex x) {
        return std::isfinite(x.real()) && std::isfinite(x.imag());
    });
}

Matrix &Matrix::operator+=(const Matrix &other) {
    require_same_dim(*this, other, "Matrix addition");
    for (std::size_t k = 0; k < entries_.size(); k++) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &other) {
    require_same_dim(*this, other, "Matrix subtraction");
    for (std::size_t k = 0; k < entries_.size(); k++) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

Matrix &Matrix::operator*=(Complex scale) {
    for (auto &x : entries_) {
        x *= scale;
    }
    return *this;
}

Matrix operator+(Matrix a, const Matrix &b) {
    a += b;
    return a;
}

Matrix operator-(Matrix a, const Matrix &b) {
    a -= b;
    return a;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    require_same_dim(a, b, "Matrix product");
    std::size_t n = a.dim();
    Matrix out(n);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t k = 0; k < n; k++) {
            Complex ark = a(r, k);
            if (ark == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < n; c++) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

Matrix operator*(Complex scale, Matrix a) {
    a *= scale;
    return a;
}

Matrix operator*(Matrix a, Complex scale) {
    a *= scale;
    return a;
}

Matrix sandwich(const Matrix &a, const Matrix &rho) {
    return a * rho * a.adjoint();
}

Matrix outer(const Vector &a, const Vector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("outer: vector lengths differ");
    }
    Matrix out(a.size());
    for (std::size_t r = 0; r < a.size(); r++) {
        for (std::size_t c = 0; c < b.size(); c++) {
            out(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return out;
}

Complex inner(const Vector &a, const Vector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("inner: vector lengths differ");
    }
    Complex total = 0;
    for (std::size_t k = 0; k < a.size(); k++) {
        total += std::conj(a[k]) * b[k];
    }
    return total;
}

Vector apply(const Matrix &a, const Vector &v) {
    if (a.dim() != v.size()) {
        throw std::invalid_argument("apply: dimension mismatch");
    }
    Vector out(v.size());
    for (std::size_t r = 0; r < a.dim(); r++) {
        for (std::size_t c = 0; c < a.dim(); c++) {
            out[r] += a(r, c) * v[c];
        }
    }
    return out;
}

double norm(const Vector &v) {
    return std::sqrt(inner(v, v).real());
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0;
    for (std::size_t k = 0; k < a.entries().size(); k++) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

double hermiticity_defect(const Matrix &a) {
    double worst = 0;
    for (std::size_t r = 0; r < a.dim(); r++) {
        for (std::size_t c = r; c < a.dim(); c++) {
            worst = std::max(worst, std::abs(a(r, c) - std::conj(a(c, r))));
        }
    }
    return worst;
}

Matrix tensor(const Matrix &a, const Matrix &b) {
    std::size_t na = a.dim();
    std::size_t nb = b.dim();
    Matrix out(na * nb);
    for (std::size_t ar = 0; ar < na; ar++) {
        for (std::size_t ac = 0; ac < na; ac++) {
            Complex x = a(ar, ac);
            for (std::size_t br = 0; br < nb; br++) {
                for (std::size_t bc = 0; bc < nb; bc++) {
                    out(ar * nb + br, ac * nb + bc) = x * b(br, bc);
                }
            }
        }
    }
    return out;
}

Matrix partial_trace(const Matrix &rho, Subsystem traced, std::pair<std::size_t, std::size_t> dims) {
    auto [da, db] = dims;
    if (da == 0 || db == 0 || da * db != rho.dim()) {
        std::ostringstream msg;
        msg << "partial_trace: operator of dimension " << rho.dim() << " does not factor as " << da << " x " << db;
        throw std::invalid_argument(msg.str());
    }
    if (traced == Subsystem::second) {
        Matrix out(da);
        for (std::size_t i = 0; i < da; i++) {
            for (std::size_t j = 0; j < da; j++) {
                for (std::size_t k = 0; k < db; k++) {
                    out(i, j) += rho(i * db + k, j * db + k);
                }
            }
        }
        return out;
    }
    Matrix out(db);
    for (std::size_t k = 0; k < db; k++) {
        for (std::size_t l = 0; l < db; l++) {
            for (std::size_t i = 0; i < da; i++) {
                out(k, l) += rho(i * db + k, i * db + l);
            }
        }
    }
    return out;
}

EigenDecomposition hermitian_eig(const Matrix &input) {
    require_hermitian(input, "hermitian_eig");
    std::size_t n = input.dim();
    Matrix a = 0.5 * (input + input.adjoint());
    Matrix v = Matrix::identity(n);

    for (int sweep = 0; sweep < kJacobiMaxSweeps; sweep++) {
        if (off_diagonal_mass(a) < kJacobiOffDiagonalTarget) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                Complex g = a(p, q);
                double mag = std::abs(g);
                if (mag == 0) {
                    continue;
                }
                // Unitary J = diag(1, conj(phase)) * [[c, s], [-s, c]] on the (p, q) plane.
                Complex phase_conj = std::conj(g) / mag;
                double theta = (a(q, q).real() - a(p, p).real()) / (2 * mag);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(1 + t * t);
                double s = t * c;
                Complex jpp = c;
                Complex jpq = s;
                Complex jqp = -s * phase_conj;
                Complex jqq = c * phase_conj;

                for (std::size_t k = 0; k < n; k++) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                    Complex vkp = v(k, p);
                    Complex vkq = v(k, q);
                    v(k, p) = vkp * jpp + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * jqq;
                }
                for (std::size_t k = 0; k < n; k++) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    EigenDecomposition out;
    out.values.reserve(n);
    out.vectors.reserve(n);
    for (std::size_t k : order) {
        out.values.push_back(a(k, k).real());
        Vector column(n);
        for (std::size_t r = 0; r < n; r++) {
            column[r] = v(r, k);
        }
        canonicalize_phase(column);
        out.vectors.push_back(std::move(column));
    }
    return out;
}

Matrix hermitian_exp(const Matrix &h, double phase) {
    require_hermitian(h, "hermitian_exp");
    EigenDecomposition eig = hermitian_eig(h);
    Matrix out(h.dim());
    for (std::size_t k = 0; k < eig.values.size(); k++) {
        out += std::polar(1.0, phase * eig.values[k]) * outer(eig.vectors[k], eig.vectors[k]);
    }
    return out;
}

double trace_norm(const Matrix &a) {
    double total = 0;
    if (hermiticity_defect(a) <= 1e-12) {
        // Hermitian: singular values are |eigenvalues|, which avoids the
        // square-root precision loss of the general path.
        for (double x : hermitian_eig(0.5 * (a + a.adjoint())).values) {
            total += std::abs(x);
        }
        return total;
    }
    for (double x : hermitian_eig(a.adjoint() * a).values) {
        total += std::sqrt(std::max(x, 0.0));
    }
    return total;
}

namespace pauli {

Matrix identity() {
    return Matrix::identity(2);
}

Matrix x() {
    return Matrix{{0, 1}, {1, 0}};
}

Matrix y() {
    return Matrix{{0, Complex{0, -1}}, {Complex{0, 1}, 0}};
}

Matrix z() {
    return Matrix{{1, 0}, {0, -1}};
}

}  // namespace pauli

namespace ket {

Vector zero() {
    return {1, 0};
}

Vector one() {
    return {0, 1};
}

Vector plus() {
    return {M_SQRT1_2, M_SQRT1_2};
}

Vector minus() {
    return {M_SQRT1_2, -M_SQRT1_2};
}

}  // namespace ket

}  // namespace qswitch
