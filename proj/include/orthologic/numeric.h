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

#ifndef ORTHOLOGIC_NUMERIC_H
#define ORTHOLOGIC_NUMERIC_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <string_view>
#include <vector>

#include "orthologic/errors.h"

namespace orthologic {

using Complex = std::complex<double>;

/// Dense complex column vector.
class Vector {
   public:
    Vector() = default;
    explicit Vector(size_t n) : data_(n) {
    }
    Vector(std::initializer_list<Complex> values) : data_(values) {
    }
    explicit Vector(std::vector<Complex> values) : data_(std::move(values)) {
    }

    static Vector unit(size_t n, size_t i);

    size_t size() const {
        return data_.size();
    }
    Complex &operator[](size_t i) {
        return data_[i];
    }
    const Complex &operator[](size_t i) const {
        return data_[i];
    }
    const std::vector<Complex> &data() const {
        return data_;
    }

    double norm() const;
    double norm_squared() const;
    Vector conj() const;
    bool is_finite() const;

    Vector &operator+=(const Vector &other);
    Vector &operator-=(const Vector &other);
    Vector &operator*=(Complex s);
    /// Adds s * other in place.
    void axpy(Complex s, const Vector &other);

    friend Vector operator+(Vector a, const Vector &b) {
        a += b;
        return a;
    }
    friend Vector operator-(Vector a, const Vector &b) {
        a -= b;
        return a;
    }
    friend Vector operator*(Complex s, Vector a) {
        a *= s;
        return a;
    }
    friend Vector operator*(Vector a, Complex s) {
        a *= s;
        return a;
    }
    friend Vector operator/(Vector a, Complex s) {
        a *= Complex(1) / s;
        return a;
    }
    friend Vector operator-(Vector a) {
        a *= -1.0;
        return a;
    }

   private:
    std::vector<Complex> data_;
};

/// Dense complex matrix, column-major.
class Matrix {
   public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    }

    static Matrix identity(size_t n);
    static Matrix from_columns(size_t rows, const std::vector<Vector> &columns);
    static Matrix diagonal(const std::vector<Complex> &entries);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    Complex &operator()(size_t r, size_t c) {
        return data_[c * rows_ + r];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return data_[c * rows_ + r];
    }
    const std::vector<Complex> &data() const {
        return data_;
    }

    Vector col(size_t c) const;
    void set_col(size_t c, const Vector &v);
    std::vector<Vector> columns() const;

    Matrix adjoint() const;
    Matrix transpose() const;
    Matrix conj() const;
    double frobenius_norm() const;
    /// Largest absolute entry.
    double max_abs() const;
    bool is_finite() const;

    Matrix &operator+=(const Matrix &other);
    Matrix &operator-=(const Matrix &other);
    Matrix &operator*=(Complex s);

    friend Matrix operator+(Matrix a, const Matrix &b) {
        a += b;
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix &b) {
        a -= b;
        return a;
    }
    friend Matrix operator*(Complex s, Matrix a) {
        a *= s;
        return a;
    }
    friend Matrix operator*(Matrix a, Complex s) {
        a *= s;
        return a;
    }
    friend Matrix operator*(const Matrix &a, const Matrix &b);
    friend Vector operator*(const Matrix &a, const Vector &v);

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Horizontal concatenation.
Matrix hcat(const Matrix &a, const Matrix &b);
/// Kronecker product; (a (x) b)[i*b.rows()+k, j*b.cols()+l] = a[i,j] b[k,l].
Matrix kron(const Matrix &a, const Matrix &b);
Vector kron(const Vector &a, const Vector &b);

/// Numerical thresholds.
///  eps_rank: a direction is kept when its residual norm exceeds
///            eps_rank times the largest input norm.
///  eps_eq:   subspace equality and inclusion.
///  eps_prob: boundary of the true/false truth values.
struct Tolerance {
    double eps_rank = 1e-9;
    double eps_eq = 1e-8;
    double eps_prob = 1e-10;

    /// Throws InvalidParameter unless 0 < eps_rank < eps_eq < 1 and eps_prob > 0.
    void validate() const;
    /// Copy of `base` with eps_eq replaced by ORTHOLOGIC_TOL when that is set.
    static Tolerance from_environment(Tolerance base);
    static Tolerance from_environment();
};

/// Conjugate-linear in the first argument.
Complex inner(const Vector &x, const Vector &y);
double norm(const Vector &x);

/// Real part of the inner product recovered from norms alone:
/// (|x+y|^2 - |x-y|^2) / 4.
double polarization_real(const Vector &x, const Vector &y);
/// Inner product recovered from norms alone.
Complex polarization_inner(const Vector &x, const Vector &y);

/// Orthonormal basis of span(vectors) as the columns of a dim x k matrix.
/// Modified Gram-Schmidt with one re-orthogonalization pass and the largest
/// remaining vector as pivot. Deterministic for fixed input.
Matrix orthonormalize(const std::vector<Vector> &vectors, size_t dim, const Tolerance &tol = Tolerance{});
Matrix orthonormalize(const Matrix &columns, const Tolerance &tol = Tolerance{});
size_t rank(const std::vector<Vector> &vectors, size_t dim, const Tolerance &tol = Tolerance{});
size_t rank(const Matrix &columns, const Tolerance &tol = Tolerance{});

/// Unpivoted thin QR of a full-column-rank matrix. R has a positive real
/// diagonal. Throws PreconditionViolated when a column is dependent.
struct ThinQR {
    Matrix q;
    Matrix r;
};
ThinQR thin_qr(const Matrix &a);

/// Coefficients c minimising |a c - b| for full-column-rank a.
struct LeastSquares {
    Vector coefficients;
    double residual;
};
LeastSquares least_squares(const Matrix &a, const Vector &b);

/// Seeded source of randomness built on std::mt19937_64.
/// Uniform doubles take the top 53 bits of each draw; gaussians come from
/// Box-Muller (cosine branch first, sine branch cached), so streams are
/// reproducible across platforms.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    uint64_t next_u64() {
        return engine_();
    }
    /// Uniform in [0, 1).
    double uniform();
    /// Uniform integer in [0, n).
    size_t below(size_t n);
    double gaussian();
    /// Real and imaginary parts independent with variance 1/2 each.
    Complex complex_gaussian();
    Vector gaussian_vector(size_t n);
    Matrix gaussian_matrix(size_t rows, size_t cols);

   private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0;
};

/// Haar-distributed unitary: QR of a complex gaussian matrix with the
/// phases fixed so R has a real positive diagonal.
Matrix random_unitary(size_t d, uint64_t seed);
Matrix random_unitary(size_t d, Rng &rng);

/// splitmix64(base ^ fnv1a64(tag) ^ index). Used to give each command and
/// each trial its own stream from a single seed.
uint64_t derive_seed(uint64_t base, std::string_view tag, uint64_t index);

}  // namespace orthologic

#endif
