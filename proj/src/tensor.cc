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

#include "orthologic/tensor.h"

#include <set>

namespace orthologic {

TensorIndex::TensorIndex(size_t d1, size_t d2, bool dual_first_factor)
    : d1(d1), d2(d2), dual_first_factor(dual_first_factor) {
    if (d1 < 1 || d2 < 1) {
        throw InvalidDimension("tensor factors need positive dimension");
    }
}

size_t TensorIndex::flatten(size_t i, size_t j) const {
    if (i >= d1 || j >= d2) {
        throw InvalidIndex("tensor index out of range");
    }
    return i * d2 + j;
}

std::pair<size_t, size_t> TensorIndex::unflatten(size_t k) const {
    if (k >= size()) {
        throw InvalidIndex("flat tensor index out of range");
    }
    return {k / d2, k % d2};
}

Complex DualVector::operator()(const Vector &y) const {
    if (y.size() != coordinates.size()) {
        throw DimensionMismatch("functional applied to a vector of the wrong size");
    }
    Complex s = 0;
    for (size_t i = 0; i < y.size(); i++) {
        s += coordinates[i] * y[i];
    }
    return s;
}

DualVector riesz(const Vector &x) {
    return DualVector{x.conj()};
}

Vector riesz_inverse(const DualVector &f) {
    return f.coordinates.conj();
}

Complex dual_inner(const DualVector &f, const DualVector &g) {
    if (f.size() != g.size()) {
        throw DimensionMismatch("dual_inner: sizes differ");
    }
    return inner(riesz_inverse(g), riesz_inverse(f));
}

namespace {

void require_factor_sizes(size_t a, size_t b, const TensorIndex &idx) {
    if (a != idx.d1 || b != idx.d2) {
        throw DimensionMismatch("tensor factors do not match the index dimensions");
    }
}

}  // namespace

Vector elementary_tensor(const Vector &x, const Vector &y, const TensorIndex &idx) {
    require_factor_sizes(x.size(), y.size(), idx);
    return kron(x, y);
}

Vector elementary_tensor(const DualVector &f, const Vector &y, const TensorIndex &idx) {
    require_factor_sizes(f.size(), y.size(), idx);
    return kron(f.coordinates, y);
}

Complex tensor_inner(const Vector &v, const Vector &w, const TensorIndex &idx) {
    if (v.size() != idx.size() || w.size() != idx.size()) {
        throw DimensionMismatch("tensor_inner: vector size does not match the index");
    }
    // The flattened basis e_i (x) f_j (or e^i (x) f_j) is orthonormal for the
    // product inner product, so it is the plain inner product of coordinates.
    return inner(v, w);
}

Matrix coefficient_matrix(const Vector &v, const TensorIndex &idx) {
    if (v.size() != idx.size()) {
        throw DimensionMismatch("coefficient_matrix: vector size does not match the index");
    }
    Matrix m(idx.d1, idx.d2);
    for (size_t i = 0; i < idx.d1; i++) {
        for (size_t j = 0; j < idx.d2; j++) {
            m(i, j) = v[idx.flatten(i, j)];
        }
    }
    return m;
}

SchmidtResult is_separable(const Vector &v, const TensorIndex &idx, const Tolerance &tol) {
    if (v.size() != idx.size()) {
        throw DimensionMismatch("is_separable: vector size does not match the index");
    }
    if (v.norm() < tol.eps_rank) {
        throw ZeroState("is_separable: zero tensor");
    }
    size_t r = rank(coefficient_matrix(v, idx), tol);
    return SchmidtResult{r, r == 1};
}

double product_state_probability(const StateVector &psi1, const StateVector &psi2, const std::vector<size_t> &b1,
                                 const std::vector<size_t> &b2, const Tolerance &tol) {
    Vector v1 = psi1.normalized ? psi1.vector : StateVector::normalize(psi1.vector, tol).vector;
    Vector v2 = psi2.normalized ? psi2.vector : StateVector::normalize(psi2.vector, tol).vector;
    TensorIndex idx(v1.size(), v2.size());
    std::set<size_t> s1(b1.begin(), b1.end());
    std::set<size_t> s2(b2.begin(), b2.end());
    if ((!s1.empty() && *s1.rbegin() >= idx.d1) || (!s2.empty() && *s2.rbegin() >= idx.d2)) {
        throw DimensionMismatch("index set reaches past the factor dimension");
    }
    Vector joint = elementary_tensor(v1, v2, idx);
    double mass = 0;
    for (size_t i : s1) {
        for (size_t j : s2) {
            mass += std::norm(joint[idx.flatten(i, j)]);
        }
    }
    return mass;
}

}  // namespace orthologic
