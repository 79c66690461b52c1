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

#ifndef ORTHOLOGIC_SUBSPACE_H
#define ORTHOLOGIC_SUBSPACE_H

#include <vector>

#include "json.hpp"
#include "orthologic/numeric.h"

namespace orthologic {

/// Closed subspace of C^d, stored as a d x k matrix with orthonormal columns.
/// The zero subspace has k = 0.
class Subspace {
   public:
    Subspace() = default;

    static Subspace zero(size_t ambient_dim);
    static Subspace full(size_t ambient_dim);
    /// Wraps a basis that is already orthonormal; throws NotOrthonormal otherwise.
    static Subspace from_orthonormal(Matrix basis, const Tolerance &tol = Tolerance{});

    size_t ambient_dim() const {
        return basis_.rows();
    }
    size_t dim() const {
        return basis_.cols();
    }
    const Matrix &basis() const {
        return basis_;
    }

    Matrix projector() const;
    Vector project(const Vector &v) const;
    /// Distance of v from the subspace is below eps_eq * max(1, |v|).
    bool contains(const Vector &v, const Tolerance &tol = Tolerance{}) const;

   private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {
    }
    friend Subspace span_of(const Matrix &columns, const Tolerance &tol);
    Matrix basis_;
};

Subspace span_of(const std::vector<Vector> &vectors, size_t ambient_dim, const Tolerance &tol = Tolerance{});
Subspace span_of(const Matrix &columns, const Tolerance &tol = Tolerance{});
/// One-dimensional span of a nonzero vector; throws ZeroState for zero.
Subspace ray(const Vector &v, const Tolerance &tol = Tolerance{});
/// Span of the listed standard basis vectors.
Subspace coordinate_subspace(size_t ambient_dim, const std::vector<size_t> &indices);

Subspace join(const Subspace &p, const Subspace &q, const Tolerance &tol = Tolerance{});
/// Computed through complements: ortho(join(ortho(p), ortho(q))).
Subspace meet(const Subspace &p, const Subspace &q, const Tolerance &tol = Tolerance{});
Subspace ortho(const Subspace &p, const Tolerance &tol = Tolerance{});
bool leq(const Subspace &p, const Subspace &q, const Tolerance &tol = Tolerance{});
bool equal(const Subspace &p, const Subspace &q, const Tolerance &tol = Tolerance{});
/// Frobenius distance between the two orthogonal projectors.
double projector_distance(const Subspace &p, const Subspace &q);
bool is_atom(const Subspace &p);

/// Image of p under a linear map with the given matrix.
Subspace image(const Matrix &map, const Subspace &p, const Tolerance &tol = Tolerance{});
/// Entrywise complex conjugate of p.
Subspace conjugate(const Subspace &p, const Tolerance &tol = Tolerance{});

/// Span of the first k columns of a Haar random unitary.
Subspace random_subspace(size_t ambient_dim, size_t k, Rng &rng);
Subspace random_subspace(size_t ambient_dim, size_t k, uint64_t seed);

/// {"ambient_dim": d, "basis": [[re, im], ...]} with the basis column-major.
void to_json(nlohmann::json &j, const Subspace &p);
/// Rejects bases that are not orthonormal.
void from_json(const nlohmann::json &j, Subspace &p);

nlohmann::json vector_to_json(const Vector &v);
Vector vector_from_json(const nlohmann::json &j);

}  // namespace orthologic

#endif
