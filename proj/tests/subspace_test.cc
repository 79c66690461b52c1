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

#include "orthologic/subspace.h"

#include "gtest/gtest.h"
#include "oracles.h"

using namespace orthologic;

namespace {

Subspace random_any(size_t d, Rng &rng) {
    return random_subspace(d, rng.below(d + 1), rng);
}

}  // namespace

TEST(subspace, projector_matches_gram_inverse_formula) {
    Rng rng(1);
    for (int t = 0; t < 30; t++) {
        size_t d = 2 + rng.below(5);
        size_t k = 1 + rng.below(d);
        Matrix gen = rng.gaussian_matrix(d, k);
        Subspace s = span_of(gen);
        ASSERT_EQ(s.dim(), k);
        EXPECT_LT(oracle::frobenius_distance(s.projector(), oracle::projector_of_columns(oracle::to_mat(gen))), 1e-10);
    }
}

TEST(subspace, join_dimension_matches_rank_of_union) {
    Rng rng(2);
    for (int t = 0; t < 50; t++) {
        size_t d = 2 + rng.below(5);
        Subspace p = random_any(d, rng);
        Subspace q = random_any(d, rng);
        Subspace j = join(p, q);
        EXPECT_EQ(j.dim(), oracle::rank(hcat(p.basis(), q.basis())));
        EXPECT_TRUE(leq(p, j));
        EXPECT_TRUE(leq(q, j));
    }
}

TEST(subspace, meet_dimension_by_inclusion_exclusion) {
    Rng rng(3);
    for (int t = 0; t < 50; t++) {
        size_t d = 2 + rng.below(5);
        Subspace p = random_any(d, rng);
        Subspace q = random_any(d, rng);
        Subspace m = meet(p, q);
        EXPECT_EQ(m.dim() + join(p, q).dim(), p.dim() + q.dim());
        EXPECT_TRUE(leq(m, p));
        EXPECT_TRUE(leq(m, q));
    }
}

TEST(subspace, meet_of_planes_in_c3_is_their_common_line) {
    Subspace p = coordinate_subspace(3, {0, 1});
    Subspace q = span_of({Vector{1.0, 1.0, 0.0}, Vector{0.0, 0.0, 1.0}}, 3);
    Subspace m = meet(p, q);
    EXPECT_TRUE(equal(m, ray(Vector{1.0, 1.0, 0.0})));
}

TEST(subspace, ortho_is_involutive_and_complementary) {
    Rng rng(4);
    for (int t = 0; t < 50; t++) {
        size_t d = 1 + rng.below(6);
        Subspace p = random_any(d, rng);
        Subspace o = ortho(p);
        EXPECT_EQ(o.dim(), d - p.dim());
        EXPECT_LT((p.basis().adjoint() * o.basis()).frobenius_norm(), 1e-12);
        EXPECT_TRUE(equal(ortho(o), p));
    }
}

TEST(subspace, ortho_of_full_and_zero) {
    EXPECT_EQ(ortho(Subspace::full(4)).dim(), 0u);
    EXPECT_EQ(ortho(Subspace::zero(4)).dim(), 4u);
    EXPECT_EQ(meet(Subspace::full(3), Subspace::full(3)).dim(), 3u);
}

TEST(subspace, leq_and_equal_are_basis_independent) {
    Rng rng(5);
    Subspace p = random_subspace(5, 2, rng);
    Matrix mix(2, 2);
    mix(0, 0) = Complex(0, 1);
    mix(1, 0) = 1;
    mix(0, 1) = 1;
    mix(1, 1) = Complex(0, 1);
    Subspace q = span_of(p.basis() * mix);
    EXPECT_TRUE(equal(p, q));
    EXPECT_TRUE(leq(p, q));
    EXPECT_LT(projector_distance(p, q), 1e-12);
}

TEST(subspace, equal_detects_different_subspaces) {
    Subspace a = ray(Vector{1.0, 0.0});
    Subspace b = ray(Vector{1.0, 1e-3});
    EXPECT_FALSE(equal(a, b));
    EXPECT_FALSE(leq(b, a));
}

TEST(subspace, ray_rejects_zero_vector) {
    EXPECT_THROW(ray(Vector(3)), ZeroState);
}

TEST(subspace, from_orthonormal_validates) {
    Matrix m(2, 1);
    m(0, 0) = 2;
    EXPECT_THROW(Subspace::from_orthonormal(m), NotOrthonormal);
}

TEST(subspace, mismatched_ambient_dimensions_rejected) {
    EXPECT_THROW(join(Subspace::full(2), Subspace::full(3)), DimensionMismatch);
    EXPECT_THROW(meet(Subspace::full(2), Subspace::full(3)), DimensionMismatch);
}

TEST(subspace, image_under_unitary_and_conjugation) {
    Rng rng(6);
    Matrix u = random_unitary(4, rng);
    Subspace p = random_subspace(4, 2, rng);
    Subspace up = image(u, p);
    EXPECT_EQ(up.dim(), 2u);
    Matrix expected = u * p.projector() * u.adjoint();
    EXPECT_LT((up.projector() - expected).frobenius_norm(), 1e-12);
    Subspace c = conjugate(p);
    EXPECT_LT((c.projector() - p.projector().conj()).frobenius_norm(), 1e-12);
}

TEST(subspace, json_round_trip) {
    Rng rng(7);
    Subspace p = random_subspace(4, 2, rng);
    nlohmann::json j = p;
    Subspace q = j.get<Subspace>();
    EXPECT_TRUE(equal(p, q));
    EXPECT_EQ(j.at("ambient_dim"), 4);
}

TEST(subspace, contains_uses_relative_distance) {
    Subspace p = coordinate_subspace(3, {0});
    EXPECT_TRUE(p.contains(Vector{5.0, 0.0, 0.0}));
    EXPECT_FALSE(p.contains(Vector{1.0, 1e-4, 0.0}));
}
