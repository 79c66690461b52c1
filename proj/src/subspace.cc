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

#include <cmath>
#include <string>

namespace orthologic {

namespace {

void require_same_ambient(const Subspace &p, const Subspace &q, const char *what) {
    if (p.ambient_dim() != q.ambient_dim()) {
        throw DimensionMismatch(std::string(what) + ": ambient dimensions " + std::to_string(p.ambient_dim()) +
                                " and " + std::to_string(q.ambient_dim()));
    }
}

void require_positive(size_t d) {
    if (d < 1) {
        throw InvalidDimension("ambient dimension must be at least 1");
    }
}

}  // namespace

Subspace Subspace::zero(size_t ambient_dim) {
    require_positive(ambient_dim);
    return Subspace(Matrix(ambient_dim, 0));
}

Subspace Subspace::full(size_t ambient_dim) {
    require_positive(ambient_dim);
    return Subspace(Matrix::identity(ambient_dim));
}

Subspace Subspace::from_orthonormal(Matrix basis, const Tolerance &tol) {
    require_positive(basis.rows());
    if (basis.cols() > basis.rows()) {
        throw NotOrthonormal("more basis vectors than the ambient dimension");
    }
    if (!basis.is_finite()) {
        throw NonFinite("subspace basis has non-finite entries");
    }
    double err = (basis.adjoint() * basis - Matrix::identity(basis.cols())).frobenius_norm();
    if (err > tol.eps_eq) {
        throw NotOrthonormal("basis columns are not orthonormal (Gram error " + std::to_string(err) + ")");
    }
    return Subspace(std::move(basis));
}

Matrix Subspace::projector() const {
    return basis_ * basis_.adjoint();
}

Vector Subspace::project(const Vector &v) const {
    if (v.size() != ambient_dim()) {
        throw DimensionMismatch("project: vector size does not match ambient dimension");
    }
    return basis_ * (basis_.adjoint() * v);
}

bool Subspace::contains(const Vector &v, const Tolerance &tol) const {
    double r = (v - project(v)).norm();
    return r < tol.eps_eq * std::max(1.0, v.norm());
}

Subspace span_of(const Matrix &columns, const Tolerance &tol) {
    require_positive(columns.rows());
    return Subspace(orthonormalize(columns, tol));
}

Subspace span_of(const std::vector<Vector> &vectors, size_t ambient_dim, const Tolerance &tol) {
    require_positive(ambient_dim);
    return span_of(Matrix::from_columns(ambient_dim, vectors), tol);
}

Subspace ray(const Vector &v, const Tolerance &tol) {
    Subspace r = span_of(std::vector<Vector>{v}, v.size(), tol);
    if (r.dim() != 1) {
        throw ZeroState("ray of the zero vector");
    }
    return r;
}

Subspace coordinate_subspace(size_t ambient_dim, const std::vector<size_t> &indices) {
    std::vector<Vector> cols;
    for (size_t i : indices) {
        cols.push_back(Vector::unit(ambient_dim, i));
    }
    return span_of(cols, ambient_dim);
}

Subspace join(const Subspace &p, const Subspace &q, const Tolerance &tol) {
    require_same_ambient(p, q, "join");
    return span_of(hcat(p.basis(), q.basis()), tol);
}

Subspace ortho(const Subspace &p, const Tolerance &tol) {
    size_t d = p.ambient_dim();
    require_positive(d);
    const Matrix &b = p.basis();
    Matrix ba = b.adjoint();
    std::vector<Vector> residuals;
    residuals.reserve(d);
    for (size_t j = 0; j < d; j++) {
        Vector w = Vector::unit(d, j);
        for (int pass = 0; pass < 2; pass++) {
            w -= b * (ba * w);
        }
        // The inputs are unit vectors, so rank is judged against 1 rather
        // than against the (possibly tiny) largest residual.
        if (w.norm() > tol.eps_rank) {
            residuals.push_back(std::move(w));
        }
    }
    Matrix basis = orthonormalize(residuals, d, tol);
    if (basis.cols() != d - p.dim()) {
        throw std::logic_error("ortho: complement has dimension " + std::to_string(basis.cols()) + ", expected " +
                               std::to_string(d - p.dim()));
    }
    return Subspace::from_orthonormal(std::move(basis), tol);
}

Subspace meet(const Subspace &p, const Subspace &q, const Tolerance &tol) {
    require_same_ambient(p, q, "meet");
    return ortho(join(ortho(p, tol), ortho(q, tol), tol), tol);
}

bool leq(const Subspace &p, const Subspace &q, const Tolerance &tol) {
    require_same_ambient(p, q, "leq");
    const Matrix &bp = p.basis();
    const Matrix &bq = q.basis();
    Matrix diff = bq * (bq.adjoint() * bp) - bp;
    return diff.frobenius_norm() < tol.eps_eq * std::sqrt(static_cast<double>(p.ambient_dim()));
}

double projector_distance(const Subspace &p, const Subspace &q) {
    require_same_ambient(p, q, "projector_distance");
    return (p.projector() - q.projector()).frobenius_norm();
}

bool equal(const Subspace &p, const Subspace &q, const Tolerance &tol) {
    return projector_distance(p, q) < tol.eps_eq * static_cast<double>(p.ambient_dim());
}

bool is_atom(const Subspace &p) {
    return p.dim() == 1;
}

Subspace image(const Matrix &map, const Subspace &p, const Tolerance &tol) {
    if (map.cols() != p.ambient_dim()) {
        throw DimensionMismatch("image: map does not act on the ambient space");
    }
    return span_of(map * p.basis(), tol);
}

Subspace conjugate(const Subspace &p, const Tolerance &tol) {
    return Subspace::from_orthonormal(p.basis().conj(), tol);
}

Subspace random_subspace(size_t ambient_dim, size_t k, Rng &rng) {
    require_positive(ambient_dim);
    if (k > ambient_dim) {
        throw InvalidDimension("random_subspace: k exceeds ambient dimension");
    }
    Matrix u = random_unitary(ambient_dim, rng);
    Matrix b(ambient_dim, k);
    for (size_t c = 0; c < k; c++) {
        b.set_col(c, u.col(c));
    }
    return Subspace::from_orthonormal(std::move(b));
}

Subspace random_subspace(size_t ambient_dim, size_t k, uint64_t seed) {
    Rng rng(seed);
    return random_subspace(ambient_dim, k, rng);
}

nlohmann::json vector_to_json(const Vector &v) {
    nlohmann::json out = nlohmann::json::array();
    for (size_t i = 0; i < v.size(); i++) {
        out.push_back({v[i].real(), v[i].imag()});
    }
    return out;
}

Vector vector_from_json(const nlohmann::json &j) {
    Vector v(j.size());
    for (size_t i = 0; i < j.size(); i++) {
        const auto &e = j.at(i);
        if (!e.is_array() || e.size() != 2) {
            throw InvalidParameter("complex entries must be [re, im] pairs");
        }
        v[i] = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
    return v;
}

void to_json(nlohmann::json &j, const Subspace &p) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto &c : p.basis().data()) {
        basis.push_back({c.real(), c.imag()});
    }
    j = nlohmann::json{{"ambient_dim", p.ambient_dim()}, {"basis", basis}};
}

void from_json(const nlohmann::json &j, Subspace &p) {
    size_t d = j.at("ambient_dim").get<size_t>();
    require_positive(d);
    Vector flat = vector_from_json(j.at("basis"));
    if (flat.size() % d != 0) {
        throw DimensionMismatch("basis length is not a multiple of ambient_dim");
    }
    size_t k = flat.size() / d;
    Matrix b(d, k);
    for (size_t c = 0; c < k; c++) {
        for (size_t r = 0; r < d; r++) {
            b(r, c) = flat[c * d + r];
        }
    }
    p = Subspace::from_orthonormal(std::move(b));
}

}  // namespace orthologic
