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

#ifndef ORTHOLOGIC_TENSOR_H
#define ORTHOLOGIC_TENSOR_H

#include <vector>

#include "orthologic/truth.h"

namespace orthologic {

/// Flattening of a bipartite index: (i, j) <-> i * d2 + j. When
/// dual_first_factor is set the first factor is H1* in dual coordinates.
struct TensorIndex {
    size_t d1 = 0;
    size_t d2 = 0;
    bool dual_first_factor = false;

    TensorIndex(size_t d1, size_t d2, bool dual_first_factor = false);

    size_t size() const {
        return d1 * d2;
    }
    size_t flatten(size_t i, size_t j) const;
    std::pair<size_t, size_t> unflatten(size_t k) const;
};

/// Element of the dual space, stored by its coordinates in the dual basis
/// e^i. With that convention the functional of x has coordinates conj(x).
struct DualVector {
    Vector coordinates;

    size_t size() const {
        return coordinates.size();
    }
    /// f(y) = sum_i f_i y_i.
    Complex operator()(const Vector &y) const;
};

/// x -> <x, .>.
DualVector riesz(const Vector &x);
Vector riesz_inverse(const DualVector &f);
/// [f, g] = <k^-1 g, k^-1 f>; antilinear in f.
Complex dual_inner(const DualVector &f, const DualVector &g);

/// Flattened outer product: (x (x) y)[flatten(i, j)] = x_i y_j.
Vector elementary_tensor(const Vector &x, const Vector &y, const TensorIndex &idx);
Vector elementary_tensor(const DualVector &f, const Vector &y, const TensorIndex &idx);

/// Inner product on the flattened tensor space.
Complex tensor_inner(const Vector &v, const Vector &w, const TensorIndex &idx);

/// The d1 x d2 coefficient matrix of a flattened tensor.
Matrix coefficient_matrix(const Vector &v, const TensorIndex &idx);

struct SchmidtResult {
    size_t rank = 0;
    bool separable = false;
};

/// Numerical rank of the coefficient matrix. Throws ZeroState for v = 0.
SchmidtResult is_separable(const Vector &v, const TensorIndex &idx, const Tolerance &tol = Tolerance{});

/// Mass of psi1 (x) psi2 on the index rectangle b1 x b2, summed directly on
/// the flattened product vector.
double product_state_probability(const StateVector &psi1, const StateVector &psi2, const std::vector<size_t> &b1,
                                 const std::vector<size_t> &b2, const Tolerance &tol = Tolerance{});

}  // namespace orthologic

#endif
