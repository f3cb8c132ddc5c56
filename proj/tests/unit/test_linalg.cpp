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


#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qswitch/linalg.hpp"
#include "random.hpp"

using namespace qswitch;
using qswitch::testing::Rng;

namespace {

Matrix h1() {
    return tensor(pauli::z(), pauli::identity()) + tensor(pauli::identity(), pauli::z()) +
           0.5 * tensor(pauli::x(), pauli::x());
}

double orthonormality_defect(const std::vector<Vector> &vs) {
    double worst = 0;
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = 0; b < vs.size(); ++b)
            worst = std::max(worst, std::abs(inner(vs[a], vs[b]) - (a == b ? 1.0 : 0.0)));
    return worst;
}

}  // namespace

TEST_CASE("basic matrix operations") {
    CHECK(max_abs_diff(pauli::x() * pauli::x(), pauli::identity()) == 0);
    CHECK(Matrix{{0, 1}, {0, 0}}.adjoint() == Matrix{{0, 0}, {1, 0}});
    CHECK(pauli::z().trace() == Complex(0));
    CHECK(max_abs_diff(pauli::y().adjoint(), pauli::y()) == 0);
    CHECK_THROWS_AS(pauli::x() * Matrix::identity(4), std::invalid_argument);
    CHECK_THROWS_AS(pauli::x() + Matrix::identity(4), std::invalid_argument);
    CHECK_THROWS_AS(Matrix(0), std::invalid_argument);
    CHECK_THROWS_AS((Matrix{{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("hermitian_eig on fixed inputs") {
    SUBCASE("sigma x") {
        const auto eig = hermitian_eig(pauli::x());
        CHECK(eig.values[0] == doctest::Approx(1).epsilon(1e-14));
        CHECK(eig.values[1] == doctest::Approx(-1).epsilon(1e-14));
        CHECK(std::abs(std::abs(inner(eig.vectors[0], ket::plus())) - 1) < 1e-12);
        CHECK(std::abs(std::abs(inner(eig.vectors[1], ket::minus())) - 1) < 1e-12);
    }
    SUBCASE("identity is degenerate") {
        const auto eig = hermitian_eig(pauli::identity());
        CHECK(eig.values[0] == 1);
        CHECK(eig.values[1] == 1);
        CHECK(orthonormality_defect(eig.vectors) < 1e-12);
    }
    SUBCASE("XX-coupled Hamiltonian") {
        const auto eig = hermitian_eig(h1());
        const double e = std::sqrt(4.25);
        const double expected[] = {e, 0.5, -0.5, -e};
        for (int k = 0; k < 4; ++k) CHECK(std::abs(eig.values[k] - expected[k]) < 1e-12);
        CHECK(std::abs(e - 2.0615528128088303) < 1e-15);
    }
    SUBCASE("largest component is real and non-negative") {
        const auto eig = hermitian_eig(Matrix{{0, Complex(0, -1)}, {Complex(0, 1), 0}});
        for (const Vector &v : eig.vectors) {
            std::size_t arg = std::abs(v[0]) >= std::abs(v[1]) - 1e-12 ? 0 : 1;
            CHECK(std::abs(v[arg].imag()) < 1e-14);
            CHECK(v[arg].real() >= 0);
        }
    }
    CHECK_THROWS_AS(hermitian_eig(Matrix{{0, 1}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("hermitian_eig reconstructs random Hermitian matrices") {
    Rng rng(11);
    for (std::size_t dim : {2u, 4u, 8u})
        for (int trial = 0; trial < 50; ++trial) {
            const Matrix a = qswitch::testing::random_hermitian(rng, dim);
            const auto eig = hermitian_eig(a);
            Matrix rebuilt(dim);
            for (std::size_t k = 0; k < dim; ++k) rebuilt += eig.values[k] * outer(eig.vectors[k], eig.vectors[k]);
            CHECK(max_abs_diff(rebuilt, a) < 1e-9);
            CHECK(orthonormality_defect(eig.vectors) < 1e-10);
            for (std::size_t k = 0; k + 1 < dim; ++k) CHECK(eig.values[k] >= eig.values[k + 1]);
            for (std::size_t k = 0; k < dim; ++k) {
                Vector r = apply(a, eig.vectors[k]);
                for (std::size_t i = 0; i < dim; ++i) r[i] -= eig.values[k] * eig.vectors[k][i];
                CHECK(norm(r) < 1e-10);
            }
        }
}

TEST_CASE("hermitian_eig is deterministic") {
    Rng rng(3);
    const Matrix a = qswitch::testing::random_hermitian(rng, 4);
    const auto e1 = hermitian_eig(a);
    const auto e2 = hermitian_eig(a);
    CHECK(e1.values == e2.values);
    CHECK(e1.vectors == e2.vectors);
}

TEST_CASE("hermitian_exp") {
    CHECK(max_abs_diff(hermitian_exp(Matrix(2), 1.3), Matrix::identity(2)) < 1e-15);
    const Matrix d = hermitian_exp(pauli::z(), std::numbers::pi / 2);
    CHECK(max_abs_diff(d, Matrix{{Complex(0, 1), 0}, {0, Complex(0, -1)}}) < 1e-15);

    const Matrix u = hermitian_exp(h1(), -1);
    CHECK(max_abs_diff(u.adjoint() * u, Matrix::identity(4)) < 1e-12);
    // Eigenphases e^{-i E_k}.
    const auto eig = hermitian_eig(h1());
    for (std::size_t k = 0; k < 4; ++k) {
        const Vector uv = apply(u, eig.vectors[k]);
        const Complex phase = std::polar(1.0, -eig.values[k]);
        for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(uv[i] - phase * eig.vectors[k][i]) < 1e-12);
    }

    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix h = qswitch::testing::random_hermitian(rng, 4);
        const Matrix up = hermitian_exp(h, 0.7);
        CHECK(max_abs_diff(up.adjoint() * up, Matrix::identity(4)) < 1e-10);
        CHECK(max_abs_diff(hermitian_exp(h, -0.7), up.adjoint()) < 1e-10);
    }
    CHECK_THROWS_AS(hermitian_exp(Matrix{{0, 1}, {0, 0}}, 1), std::invalid_argument);
}

TEST_CASE("tensor product ordering") {
    CHECK(tensor(pauli::identity(), pauli::identity()) == Matrix::identity(4));
    const Complex zd[] = {1, 1, -1, -1};
    CHECK(tensor(pauli::z(), pauli::identity()) == Matrix::diagonal(zd));
    const Matrix xx = tensor(pauli::x(), pauli::x());
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) CHECK(xx(r, c) == Complex(r + c == 3 ? 1.0 : 0.0));
}

TEST_CASE("partial trace") {
    const Matrix rho{{0.7, Complex(0.1, 0.2)}, {Complex(0.1, -0.2), 0.3}};
    const Matrix sigma{{0.25, 0.1}, {0.1, 0.75}};
    CHECK(max_abs_diff(partial_trace(tensor(rho, sigma), Subsystem::second, {2, 2}), rho) < 1e-15);
    CHECK(max_abs_diff(partial_trace(tensor(rho, sigma), Subsystem::first, {2, 2}), sigma) < 1e-15);

    Vector phi{1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0)};
    CHECK(max_abs_diff(partial_trace(outer(phi, phi), Subsystem::second, {2, 2}), 0.5 * pauli::identity()) < 1e-15);
    CHECK(max_abs_diff(partial_trace(0.25 * Matrix::identity(4), Subsystem::first, {2, 2}),
                       0.5 * pauli::identity()) < 1e-15);
    CHECK_THROWS_AS(partial_trace(Matrix::identity(4), Subsystem::first, {2, 3}), std::invalid_argument);

    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix a = qswitch::testing::ginibre(rng, 4);
        const Matrix b = qswitch::testing::ginibre(rng, 4);
        const Complex s(0.3, -1.1);
        for (Subsystem sub : {Subsystem::first, Subsystem::second}) {
            const Matrix lhs = partial_trace(a + s * b, sub, {2, 2});
            const Matrix rhs = partial_trace(a, sub, {2, 2}) + s * partial_trace(b, sub, {2, 2});
            CHECK(max_abs_diff(lhs, rhs) < 1e-12);
            CHECK(std::abs(partial_trace(a, sub, {2, 2}).trace() - a.trace()) < 1e-12);
        }
        const Matrix x = qswitch::testing::ginibre(rng, 2);
        const Matrix y = qswitch::testing::ginibre(rng, 4);
        CHECK(max_abs_diff(partial_trace(tensor(x, y), Subsystem::second, {2, 4}), y.trace() * x) < 1e-12);
    }
}

TEST_CASE("trace norm") {
    CHECK(trace_norm(pauli::identity()) == doctest::Approx(2).epsilon(1e-15));
    CHECK(trace_norm(pauli::z()) == doctest::Approx(2).epsilon(1e-15));
    CHECK(trace_norm(Matrix{{0, 1}, {0, 0}}) == doctest::Approx(1).epsilon(1e-14));
    CHECK(trace_norm(Matrix(2)) == 0);

    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix a = qswitch::testing::ginibre(rng, 4);
        const Matrix b = qswitch::testing::ginibre(rng, 4);
        const Complex s(-0.4, 2.0);
        CHECK(std::abs(trace_norm(s * a) - std::abs(s) * trace_norm(a)) < 1e-9);
        CHECK(trace_norm(a + b) <= trace_norm(a) + trace_norm(b) + 1e-9);
        CHECK(trace_norm(a) >= 0);
    }
}
