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

// Reference computations the tests compare against. None of them go through
// the library's Gram-Schmidt, projectors or intertwiners; they work on raw
// std::complex arrays with textbook algorithms.

#ifndef ORTHOLOGIC_TESTS_ORACLES_H
#define ORTHOLOGIC_TESTS_ORACLES_H

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "orthologic/numeric.h"

namespace oracle {

using C = std::complex<double>;
// Row-major dense matrix.
using Mat = std::vector<std::vector<C>>;

inline Mat to_mat(const orthologic::Matrix &m) {
    Mat out(m.rows(), std::vector<C>(m.cols()));
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out[r][c] = m(r, c);
        }
    }
    return out;
}

inline C inner(const orthologic::Vector &x, const orthologic::Vector &y) {
    C s = 0;
    for (size_t i = 0; i < x.size(); i++) {
        s += std::conj(x[i]) * y[i];
    }
    return s;
}

inline Mat mul(const Mat &a, const Mat &b) {
    size_t n = a.size();
    size_t k = b.size();
    size_t m = b.empty() ? 0 : b[0].size();
    Mat out(n, std::vector<C>(m));
    for (size_t i = 0; i < n; i++) {
        for (size_t l = 0; l < k; l++) {
            for (size_t j = 0; j < m; j++) {
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    return out;
}

inline Mat adjoint(const Mat &a) {
    size_t n = a.size();
    size_t m = n ? a[0].size() : 0;
    Mat out(m, std::vector<C>(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < m; j++) {
            out[j][i] = std::conj(a[i][j]);
        }
    }
    return out;
}

// Rank by Gaussian elimination with partial pivoting.
inline size_t rank(Mat a, double tol = 1e-9) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    double scale = 0;
    for (auto &row : a) {
        for (auto &v : row) {
            scale = std::max(scale, std::abs(v));
        }
    }
    if (scale == 0) {
        return 0;
    }
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t piv = r;
        for (size_t i = r + 1; i < rows; i++) {
            if (std::abs(a[i][c]) > std::abs(a[piv][c])) {
                piv = i;
            }
        }
        if (std::abs(a[piv][c]) <= tol * scale) {
            continue;
        }
        std::swap(a[piv], a[r]);
        for (size_t i = r + 1; i < rows; i++) {
            C f = a[i][c] / a[r][c];
            for (size_t j = c; j < cols; j++) {
                a[i][j] -= f * a[r][j];
            }
        }
        r++;
    }
    return r;
}

inline size_t rank(const orthologic::Matrix &m, double tol = 1e-9) {
    return rank(to_mat(m), tol);
}

// Gauss-Jordan inverse of a square, well conditioned matrix.
inline Mat inverse(Mat a) {
    size_t n = a.size();
    Mat inv(n, std::vector<C>(n));
    for (size_t i = 0; i < n; i++) {
        inv[i][i] = 1;
    }
    for (size_t c = 0; c < n; c++) {
        size_t piv = c;
        for (size_t i = c + 1; i < n; i++) {
            if (std::abs(a[i][c]) > std::abs(a[piv][c])) {
                piv = i;
            }
        }
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        C d = a[c][c];
        for (size_t j = 0; j < n; j++) {
            a[c][j] /= d;
            inv[c][j] /= d;
        }
        for (size_t i = 0; i < n; i++) {
            if (i == c) {
                continue;
            }
            C f = a[i][c];
            for (size_t j = 0; j < n; j++) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// Orthogonal projector onto the column span of a full-column-rank matrix,
// A (A^dagger A)^-1 A^dagger.
inline Mat projector_of_columns(const Mat &a) {
    if (a.empty() || a[0].empty()) {
        size_t n = a.size();
        return Mat(n, std::vector<C>(n));
    }
    Mat ad = adjoint(a);
    return mul(mul(a, inverse(mul(ad, a))), ad);
}

inline double frobenius_distance(const Mat &a, const Mat &b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < a[i].size(); j++) {
            s += std::norm(a[i][j] - b[i][j]);
        }
    }
    return std::sqrt(s);
}

inline double frobenius_distance(const orthologic::Matrix &a, const Mat &b) {
    return frobenius_distance(to_mat(a), b);
}

// Oscillator eigenfunction built from the ladder-operator form: with
// p_0 = 1 and p_{k+1} = 2 xi p_k - p_k' the polynomial p_n is H_n, and
// psi_n = (pi)^(-1/4) (2^n n!)^(-1/2) H_n(xi) exp(-xi^2 / 2) in xi units.
inline double hermite_function(int n, double xi) {
    std::vector<double> p{1.0};
    for (int k = 0; k < n; k++) {
        std::vector<double> next(p.size() + 1, 0.0);
        for (size_t i = 0; i < p.size(); i++) {
            next[i + 1] += 2 * p[i];
        }
        for (size_t i = 1; i < p.size(); i++) {
            next[i - 1] -= static_cast<double>(i) * p[i];
        }
        p = next;
    }
    double h = 0;
    for (size_t i = p.size(); i-- > 0;) {
        h = h * xi + p[i];
    }
    double norm = std::pow(std::numbers::pi, -0.25) / std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0));
    return norm * h * std::exp(-0.5 * xi * xi);
}

// The factor map of the tensor-cylinder morphisms: on W (x (x) v), resp.
// W (conj(x) (x) v), it sends to W (y (x) v), resp. W (conj(y) (x) v), so as an
// ambient matrix it is W ((y x^dagger / |x|^2) (x) I) W^dagger with entrywise
// conjugation in the antilinear case. Side 2 puts the factor on the right.
inline Mat factor_intertwiner(int side, size_t d1, size_t d2, const orthologic::Vector &y,
                              const orthologic::Vector &x, bool conjugate, const Mat *twist) {
    size_t n = d1 * d2;
    size_t dx = x.size();
    double nx = 0;
    for (size_t i = 0; i < dx; i++) {
        nx += std::norm(x[i]);
    }
    Mat small(dx, std::vector<C>(dx));
    for (size_t i = 0; i < dx; i++) {
        for (size_t j = 0; j < dx; j++) {
            C v = y[i] * std::conj(x[j]) / nx;
            small[i][j] = conjugate ? std::conj(v) : v;
        }
    }
    Mat big(n, std::vector<C>(n));
    for (size_t i1 = 0; i1 < d1; i1++) {
        for (size_t i2 = 0; i2 < d2; i2++) {
            for (size_t j1 = 0; j1 < d1; j1++) {
                for (size_t j2 = 0; j2 < d2; j2++) {
                    C v = side == 1 ? (i2 == j2 ? small[i1][j1] : C(0)) : (i1 == j1 ? small[i2][j2] : C(0));
                    big[i1 * d2 + i2][j1 * d2 + j2] = v;
                }
            }
        }
    }
    if (twist != nullptr) {
        big = mul(mul(*twist, big), adjoint(*twist));
    }
    return big;
}

inline orthologic::Vector apply(const Mat &m, const orthologic::Vector &v) {
    orthologic::Vector out(m.size());
    for (size_t i = 0; i < m.size(); i++) {
        for (size_t j = 0; j < v.size(); j++) {
            out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

}  // namespace oracle

#endif
