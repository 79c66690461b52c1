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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace orthologic {

namespace {

void require_same_size(size_t a, size_t b, const char *what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": sizes " + std::to_string(a) + " and " + std::to_string(b));
    }
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

}  // namespace

Vector Vector::unit(size_t n, size_t i) {
    if (i >= n) {
        throw InvalidIndex("unit vector index " + std::to_string(i) + " out of range for dimension " + std::to_string(n));
    }
    Vector v(n);
    v[i] = 1;
    return v;
}

double Vector::norm_squared() const {
    double s = 0;
    for (const auto &c : data_) {
        s += std::norm(c);
    }
    return s;
}

double Vector::norm() const {
    // Scaled to avoid overflow for huge entries.
    double scale = 0;
    for (const auto &c : data_) {
        scale = std::max(scale, std::max(std::abs(c.real()), std::abs(c.imag())));
    }
    if (scale == 0 || !std::isfinite(scale)) {
        return scale;
    }
    double s = 0;
    for (const auto &c : data_) {
        s += std::norm(c / scale);
    }
    return scale * std::sqrt(s);
}

Vector Vector::conj() const {
    Vector r(*this);
    for (auto &c : r.data_) {
        c = std::conj(c);
    }
    return r;
}

bool Vector::is_finite() const {
    for (const auto &c : data_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            return false;
        }
    }
    return true;
}

Vector &Vector::operator+=(const Vector &other) {
    require_same_size(size(), other.size(), "vector addition");
    for (size_t i = 0; i < data_.size(); i++) {
        data_[i] += other.data_[i];
    }
    return *this;
}

Vector &Vector::operator-=(const Vector &other) {
    require_same_size(size(), other.size(), "vector subtraction");
    for (size_t i = 0; i < data_.size(); i++) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

Vector &Vector::operator*=(Complex s) {
    for (auto &c : data_) {
        c *= s;
    }
    return *this;
}

void Vector::axpy(Complex s, const Vector &other) {
    require_same_size(size(), other.size(), "axpy");
    for (size_t i = 0; i < data_.size(); i++) {
        data_[i] += s * other.data_[i];
    }
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::from_columns(size_t rows, const std::vector<Vector> &columns) {
    Matrix m(rows, columns.size());
    for (size_t c = 0; c < columns.size(); c++) {
        m.set_col(c, columns[c]);
    }
    return m;
}

Matrix Matrix::diagonal(const std::vector<Complex> &entries) {
    Matrix m(entries.size(), entries.size());
    for (size_t i = 0; i < entries.size(); i++) {
        m(i, i) = entries[i];
    }
    return m;
}

Vector Matrix::col(size_t c) const {
    if (c >= cols_) {
        throw InvalidIndex("column " + std::to_string(c) + " out of range");
    }
    return Vector(std::vector<Complex>(data_.begin() + c * rows_, data_.begin() + (c + 1) * rows_));
}

void Matrix::set_col(size_t c, const Vector &v) {
    if (c >= cols_) {
        throw InvalidIndex("column " + std::to_string(c) + " out of range");
    }
    require_same_size(rows_, v.size(), "set_col");
    std::copy(v.data().begin(), v.data().end(), data_.begin() + c * rows_);
}

std::vector<Vector> Matrix::columns() const {
    std::vector<Vector> out;
    out.reserve(cols_);
    for (size_t c = 0; c < cols_; c++) {
        out.push_back(col(c));
    }
    return out;
}

Matrix Matrix::adjoint() const {
    Matrix m(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            m(c, r) = (*this)(r, c);
        }
    }
    return m;
}

Matrix Matrix::conj() const {
    Matrix m(*this);
    for (auto &c : m.data_) {
        c = std::conj(c);
    }
    return m;
}

double Matrix::frobenius_norm() const {
    double s = 0;
    for (const auto &c : data_) {
        s += std::norm(c);
    }
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0;
    for (const auto &c : data_) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

bool Matrix::is_finite() const {
    for (const auto &c : data_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            return false;
        }
    }
    return true;
}

Matrix &Matrix::operator+=(const Matrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionMismatch("matrix addition shape mismatch");
    }
    for (size_t i = 0; i < data_.size(); i++) {
        data_[i] += other.data_[i];
    }
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionMismatch("matrix subtraction shape mismatch");
    }
    for (size_t i = 0; i < data_.size(); i++) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

Matrix &Matrix::operator*=(Complex s) {
    for (auto &c : data_) {
        c *= s;
    }
    return *this;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_) {
        throw DimensionMismatch("matrix product: " + std::to_string(a.cols_) + " columns vs " + std::to_string(b.rows_) + " rows");
    }
    Matrix m(a.rows_, b.cols_);
    for (size_t j = 0; j < b.cols_; j++) {
        for (size_t k = 0; k < a.cols_; k++) {
            Complex s = b(k, j);
            if (s == Complex(0)) {
                continue;
            }
            for (size_t i = 0; i < a.rows_; i++) {
                m(i, j) += a(i, k) * s;
            }
        }
    }
    return m;
}

Vector operator*(const Matrix &a, const Vector &v) {
    require_same_size(a.cols_, v.size(), "matrix-vector product");
    Vector out(a.rows_);
    for (size_t k = 0; k < a.cols_; k++) {
        for (size_t i = 0; i < a.rows_; i++) {
            out[i] += a(i, k) * v[k];
        }
    }
    return out;
}

Matrix hcat(const Matrix &a, const Matrix &b) {
    require_same_size(a.rows(), b.rows(), "hcat");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (size_t c = 0; c < a.cols(); c++) {
        for (size_t r = 0; r < a.rows(); r++) {
            m(r, c) = a(r, c);
        }
    }
    for (size_t c = 0; c < b.cols(); c++) {
        for (size_t r = 0; r < b.rows(); r++) {
            m(r, a.cols() + c) = b(r, c);
        }
    }
    return m;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            for (size_t k = 0; k < b.rows(); k++) {
                for (size_t l = 0; l < b.cols(); l++) {
                    m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return m;
}

Vector kron(const Vector &a, const Vector &b) {
    Vector v(a.size() * b.size());
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < b.size(); j++) {
            v[i * b.size() + j] = a[i] * b[j];
        }
    }
    return v;
}

void Tolerance::validate() const {
    bool ok = std::isfinite(eps_rank) && std::isfinite(eps_eq) && std::isfinite(eps_prob) && eps_rank > 0 &&
              eps_rank < eps_eq && eps_eq < 1 && eps_prob > 0 && eps_prob < 1;
    if (!ok) {
        throw InvalidParameter("tolerances must satisfy 0 < eps_rank < eps_eq < 1 and 0 < eps_prob < 1");
    }
}

Tolerance Tolerance::from_environment() {
    return from_environment(Tolerance{});
}

Tolerance Tolerance::from_environment(Tolerance base) {
    const char *raw = std::getenv("ORTHOLOGIC_TOL");
    if (raw == nullptr || *raw == '\0') {
        base.validate();
        return base;
    }
    char *end = nullptr;
    double v = std::strtod(raw, &end);
    if (end == raw || *end != '\0') {
        throw InvalidParameter(std::string("ORTHOLOGIC_TOL is not a number: ") + raw);
    }
    base.eps_eq = v;
    base.validate();
    return base;
}

Complex inner(const Vector &x, const Vector &y) {
    require_same_size(x.size(), y.size(), "inner product");
    Complex s = 0;
    for (size_t i = 0; i < x.size(); i++) {
        s += std::conj(x[i]) * y[i];
    }
    return s;
}

double norm(const Vector &x) {
    return x.norm();
}

double polarization_real(const Vector &x, const Vector &y) {
    require_same_size(x.size(), y.size(), "polarization");
    return 0.25 * ((x + y).norm_squared() - (x - y).norm_squared());
}

Complex polarization_inner(const Vector &x, const Vector &y) {
    const Complex i(0, 1);
    return Complex(polarization_real(x, y), 0) - i * polarization_real(x, i * y);
}

namespace {

Matrix orthonormalize_impl(const std::vector<Vector> &vectors, size_t dim, const Tolerance &tol, size_t max_cols) {
    double scale = 0;
    for (const auto &v : vectors) {
        require_same_size(v.size(), dim, "orthonormalize");
        if (!v.is_finite()) {
            throw NonFinite("orthonormalize: non-finite entry");
        }
        scale = std::max(scale, v.norm());
    }
    std::vector<Vector> basis;
    if (scale == 0) {
        return Matrix(dim, 0);
    }
    double threshold = tol.eps_rank * scale;
    std::vector<Vector> work = vectors;
    std::vector<bool> used(work.size(), false);
    size_t limit = std::min(dim, max_cols);
    while (basis.size() < limit) {
        size_t pick = work.size();
        double best = -1;
        for (size_t j = 0; j < work.size(); j++) {
            if (used[j]) {
                continue;
            }
            double n = work[j].norm();
            if (n > best) {
                best = n;
                pick = j;
            }
        }
        if (pick == work.size()) {
            break;
        }
        used[pick] = true;
        Vector v = work[pick];
        for (const auto &q : basis) {
            v.axpy(-inner(q, v), q);
        }
        double n = v.norm();
        if (n <= threshold) {
            break;
        }
        v *= 1.0 / n;
        for (size_t j = 0; j < work.size(); j++) {
            if (!used[j]) {
                work[j].axpy(-inner(v, work[j]), v);
            }
        }
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(dim, basis);
}

}  // namespace

Matrix orthonormalize(const std::vector<Vector> &vectors, size_t dim, const Tolerance &tol) {
    return orthonormalize_impl(vectors, dim, tol, dim);
}

Matrix orthonormalize(const Matrix &columns, const Tolerance &tol) {
    return orthonormalize_impl(columns.columns(), columns.rows(), tol, columns.rows());
}

size_t rank(const std::vector<Vector> &vectors, size_t dim, const Tolerance &tol) {
    return orthonormalize(vectors, dim, tol).cols();
}

size_t rank(const Matrix &columns, const Tolerance &tol) {
    return orthonormalize(columns, tol).cols();
}

ThinQR thin_qr(const Matrix &a) {
    size_t m = a.rows();
    size_t n = a.cols();
    if (n > m) {
        throw PreconditionViolated("thin_qr: more columns than rows");
    }
    ThinQR out{Matrix(m, n), Matrix(n, n)};
    double scale = a.max_abs();
    for (size_t j = 0; j < n; j++) {
        Vector v = a.col(j);
        // Two passes keep the columns orthogonal to working precision.
        for (int pass = 0; pass < 2; pass++) {
            for (size_t k = 0; k < j; k++) {
                Vector qk = out.q.col(k);
                Complex c = inner(qk, v);
                out.r(k, j) += c;
                v.axpy(-c, qk);
            }
        }
        double nv = v.norm();
        if (!(nv > 1e-13 * scale)) {
            throw PreconditionViolated("thin_qr: column " + std::to_string(j) + " is linearly dependent");
        }
        out.r(j, j) = nv;
        out.q.set_col(j, v * Complex(1.0 / nv));
    }
    return out;
}

LeastSquares least_squares(const Matrix &a, const Vector &b) {
    require_same_size(a.rows(), b.size(), "least_squares");
    ThinQR qr = thin_qr(a);
    size_t n = a.cols();
    Vector rhs = qr.q.adjoint() * b;
    Vector c(n);
    for (size_t ii = n; ii-- > 0;) {
        Complex s = rhs[ii];
        for (size_t k = ii + 1; k < n; k++) {
            s -= qr.r(ii, k) * c[k];
        }
        c[ii] = s / qr.r(ii, ii);
    }
    double residual = (a * c - b).norm();
    return {c, residual};
}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

size_t Rng::below(size_t n) {
    if (n == 0) {
        throw InvalidParameter("Rng::below(0)");
    }
    uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
    while (true) {
        uint64_t x = engine_();
        if (x < limit) {
            return static_cast<size_t>(x % n);
        }
    }
}

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

Complex Rng::complex_gaussian() {
    double re = gaussian();
    double im = gaussian();
    return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

Vector Rng::gaussian_vector(size_t n) {
    Vector v(n);
    for (size_t i = 0; i < n; i++) {
        v[i] = complex_gaussian();
    }
    return v;
}

Matrix Rng::gaussian_matrix(size_t rows, size_t cols) {
    Matrix m(rows, cols);
    for (size_t c = 0; c < cols; c++) {
        for (size_t r = 0; r < rows; r++) {
            m(r, c) = complex_gaussian();
        }
    }
    return m;
}

Matrix random_unitary(size_t d, Rng &rng) {
    if (d == 0) {
        throw InvalidDimension("random_unitary: dimension must be positive");
    }
    // Gram-Schmidt already yields a positive real R diagonal, which is the
    // phase fix that makes the result Haar distributed.
    return thin_qr(rng.gaussian_matrix(d, d)).q;
}

Matrix random_unitary(size_t d, uint64_t seed) {
    Rng rng(seed);
    return random_unitary(d, rng);
}

uint64_t derive_seed(uint64_t base, std::string_view tag, uint64_t index) {
    return splitmix64(base ^ fnv1a64(tag) ^ index);
}

}  // namespace orthologic
