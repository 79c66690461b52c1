// Copyright 2026 The Orthologic Authors
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

#include "orthologic/numeric.h"

#include <cstdlib>

#include "gtest/gtest.h"
#include "oracles.h"

using namespace orthologic;

TEST(numeric, inner_matches_elementwise_sum) {
    Rng rng(7);
    for (size_t d = 1; d <= 8; d++) {
        Vector x = rng.gaussian_vector(d);
        Vector y = rng.gaussian_vector(d);
        EXPECT_LT(std::abs(inner(x, y) - oracle::inner(x, y)), 1e-13);
    }
}

TEST(numeric, inner_is_conjugate_linear_in_first_argument) {
    Vector x{Complex(1, 0), Complex(0, 0)};
    Vector y{Complex(1, 0), Complex(0, 0)};
    Complex i(0, 1);
    EXPECT_EQ(inner(i * x, y), -i);
    EXPECT_EQ(inner(x, i * y), i);
}

TEST(numeric, polarization_recovers_inner_product) {
    Rng rng(11);
    for (int t = 0; t < 200; t++) {
        size_t d = 1 + rng.below(8);
        Vector x = rng.gaussian_vector(d);
        Vector y = rng.gaussian_vector(d);
        Complex i(0, 1);
        EXPECT_LT(std::abs(polarization_inner(x, y) - oracle::inner(x, y)), 1e-10);
        EXPECT_NEAR(polarization_real(x, y), polarization_real(y, x), 1e-10);
        EXPECT_NEAR(polarization_real(x, i * y), -polarization_real(i * x, y), 1e-10);
    }
}

TEST(numeric, norm_avoids_overflow) {
    Vector v{Complex(3e200, 0), Complex(0, 4e200)};
    EXPECT_NEAR(v.norm() / 5e200, 1.0, 1e-15);
}

TEST(numeric, kron_index_layout) {
    Matrix a(2, 2);
    a(0, 1) = 2;
    Matrix b(3, 1);
    b(2, 0) = 5;
    Matrix k = kron(a, b);
    ASSERT_EQ(k.rows(), 6u);
    ASSERT_EQ(k.cols(), 2u);
    EXPECT_EQ(k(0 * 3 + 2, 1 * 1 + 0), Complex(10));
    Vector x{1.0, 2.0};
    Vector y{3.0, 4.0, 5.0};
    Vector xy = kron(x, y);
    EXPECT_EQ(xy[1 * 3 + 2], Complex(10));
}

TEST(numeric, orthonormalize_rank_matches_elimination) {
    Rng rng(3);
    for (int t = 0; t < 50; t++) {
        size_t d = 2 + rng.below(6);
        size_t k = 1 + rng.below(d);
        // k random generators plus two dependent combinations.
        Matrix g = rng.gaussian_matrix(d, k);
        std::vector<Vector> cols = g.columns();
        cols.push_back(g.col(0) * Complex(2, -1));
        if (k > 1) {
            cols.push_back(g.col(0) + g.col(k - 1));
        }
        Matrix q = orthonormalize(cols, d);
        EXPECT_EQ(q.cols(), oracle::rank(Matrix::from_columns(d, cols)));
        EXPECT_LT((q.adjoint() * q - Matrix::identity(q.cols())).frobenius_norm(), 1e-12);
    }
}

TEST(numeric, orthonormalize_drops_numerically_dependent_directions) {
    Vector a{1.0, 0.0, 0.0};
    Vector b{1.0, 1e-12, 0.0};
    EXPECT_EQ(rank(std::vector<Vector>{a, b}, 3), 1u);
    Vector c{1.0, 1e-6, 0.0};
    EXPECT_EQ(rank(std::vector<Vector>{a, c}, 3), 2u);
}

TEST(numeric, random_unitary_is_unitary_and_seeded) {
    Matrix u = random_unitary(3, 42);
    EXPECT_LT((u.adjoint() * u - Matrix::identity(3)).frobenius_norm(), 1e-12);
    Matrix v = random_unitary(3, 42);
    EXPECT_EQ(u.data(), v.data());
    Matrix w = random_unitary(3, 43);
    EXPECT_NE(u.data(), w.data());
}

TEST(numeric, thin_qr_reconstructs_and_rejects_dependent_columns) {
    Rng rng(5);
    Matrix a = rng.gaussian_matrix(5, 3);
    ThinQR qr = thin_qr(a);
    EXPECT_LT((qr.q * qr.r - a).frobenius_norm(), 1e-12);
    for (size_t j = 0; j < 3; j++) {
        EXPECT_GT(qr.r(j, j).real(), 0);
        EXPECT_EQ(qr.r(j, j).imag(), 0);
    }
    Matrix dep = hcat(a, Matrix::from_columns(5, {a.col(0) + a.col(1)}));
    EXPECT_THROW(thin_qr(dep), PreconditionViolated);
}

TEST(numeric, least_squares_solves_consistent_system) {
    Rng rng(9);
    Matrix a = rng.gaussian_matrix(6, 3);
    Vector c = rng.gaussian_vector(3);
    LeastSquares ls = least_squares(a, a * c);
    EXPECT_LT((ls.coefficients - c).norm(), 1e-10);
    EXPECT_LT(ls.residual, 1e-12);
}

TEST(numeric, rng_streams_are_reproducible) {
    Rng a(123);
    Rng b(123);
    for (int i = 0; i < 10; i++) {
        EXPECT_EQ(a.gaussian(), b.gaussian());
    }
    EXPECT_NE(derive_seed(1, "x", 0), derive_seed(1, "x", 1));
    EXPECT_NE(derive_seed(1, "x", 0), derive_seed(1, "y", 0));
    EXPECT_EQ(derive_seed(1, "x", 0), derive_seed(1, "x", 0));
}

TEST(numeric, below_stays_in_range) {
    Rng rng(1);
    for (int i = 0; i < 1000; i++) {
        EXPECT_LT(rng.below(7), 7u);
    }
}

TEST(numeric, tolerance_validation_and_environment) {
    Tolerance t;
    EXPECT_NO_THROW(t.validate());
    t.eps_eq = t.eps_rank / 2;
    EXPECT_THROW(t.validate(), InvalidParameter);

    setenv("ORTHOLOGIC_TOL", "1e-7", 1);
    EXPECT_EQ(Tolerance::from_environment().eps_eq, 1e-7);
    setenv("ORTHOLOGIC_TOL", "abc", 1);
    EXPECT_THROW(Tolerance::from_environment(), InvalidParameter);
    unsetenv("ORTHOLOGIC_TOL");
    EXPECT_EQ(Tolerance::from_environment().eps_eq, 1e-8);
}

TEST(numeric, non_finite_input_rejected) {
    Vector v{Complex(std::nan(""), 0)};
    EXPECT_THROW(orthonormalize(std::vector<Vector>{v}, 1), NonFinite);
}
