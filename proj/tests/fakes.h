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

// Deliberately broken morphisms for the negative tests.

#ifndef ORTHOLOGIC_TESTS_FAKES_H
#define ORTHOLOGIC_TESTS_FAKES_H

#include "orthologic/composite.h"

namespace fakes {

using namespace orthologic;

// p -> p (x) <f0>: join preserving but the image of the whole space is not
// the whole composite.
inline SubspaceMorphism non_unitary(size_t d1, size_t d2) {
    SubspaceMorphism h;
    h.source_dim = d1;
    h.target_dim = d1 * d2;
    h.name = "non-unitary";
    Matrix f0 = Matrix::from_columns(d2, {Vector::unit(d2, 0)});
    h.map = [f0](const Subspace &p) { return Subspace::from_orthonormal(kron(p.basis(), f0)); };
    return h;
}

// p -> (p v <e0>) (x) H2, 0 -> 0: unitary and join preserving, but the
// images of independent rays overlap in e0 (x) H2.
inline SubspaceMorphism rank_inflating(size_t d1, size_t d2) {
    SubspaceMorphism h;
    h.source_dim = d1;
    h.target_dim = d1 * d2;
    h.name = "rank-inflating";
    Matrix id2 = Matrix::identity(d2);
    h.map = [d1, id2](const Subspace &p) {
        if (p.dim() == 0) {
            return Subspace::zero(d1 * id2.rows());
        }
        Subspace grown = join(p, ray(Vector::unit(d1, 0)));
        return Subspace::from_orthonormal(kron(grown.basis(), id2));
    };
    return h;
}

// p -> p (x) Q  +  conj(p) (x) Q^perp with Q the span of the first q_dim
// basis vectors of C^d2. Scalars act as lambda on one part of h(<x>) and as
// conj(lambda) on the other.
inline SubspaceMorphism mixed(size_t d1, size_t d2, size_t q_dim = 1) {
    SubspaceMorphism h;
    h.source_dim = d1;
    h.target_dim = d1 * d2;
    h.name = "mixed";
    std::vector<size_t> in;
    std::vector<size_t> out;
    for (size_t k = 0; k < d2; k++) {
        (k < q_dim ? in : out).push_back(k);
    }
    Matrix q = coordinate_subspace(d2, in).basis();
    Matrix q_perp = coordinate_subspace(d2, out).basis();
    h.map = [q, q_perp](const Subspace &p) {
        return Subspace::from_orthonormal(hcat(kron(p.basis(), q), kron(p.basis().conj(), q_perp)));
    };
    return h;
}

}  // namespace fakes

#endif
