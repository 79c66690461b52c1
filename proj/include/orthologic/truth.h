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

#ifndef ORTHOLOGIC_TRUTH_H
#define ORTHOLOGIC_TRUTH_H

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "orthologic/subspace.h"

namespace orthologic {

/// State vector; `normalized` records that |v| = 1 within eps_prob.
struct StateVector {
    Vector vector;
    bool normalized = false;

    /// Divides by the norm. Throws ZeroState when |v| < eps_rank.
    static StateVector normalize(const Vector &v, const Tolerance &tol = Tolerance{});
};

enum class TruthClass { false_value, true_value, probabilistic };

struct TruthValue {
    double value = 0;
    TruthClass classification = TruthClass::probabilistic;
};

std::string to_string(TruthClass c);

/// B B^dagger for the orthonormal basis B of q.
Matrix projector(const Subspace &q);

/// |P_q psi|^2 for the normalized state. Values below eps_prob are false,
/// above 1 - eps_prob true, anything between probabilistic.
/// Unnormalized input is divided by its norm first.
TruthValue truth_value(const StateVector &psi, const Subspace &q, const Tolerance &tol = Tolerance{});
TruthValue truth_value(const Vector &psi, const Subspace &q, const Tolerance &tol = Tolerance{});

/// Truncated harmonic oscillator in the number basis plus a position grid.
/// Units are whatever hbar, m and omega0 are given in; the defaults are
/// natural units.
struct OscillatorModel {
    int n_max = 10;
    double hbar = 1;
    double mass = 1;
    double omega0 = 1;
    /// Symmetric, uniform, with trapezoid weights.
    std::vector<double> grid;
    std::vector<double> weights;

    /// sqrt(hbar / (m omega0)).
    double natural_length() const;

    /// Grid spanning +-(sqrt(2 n_max + 1) + 4) natural lengths.
    static OscillatorModel make(int n_max, double hbar = 1, double mass = 1, double omega0 = 1, size_t points = 1201);
};

struct LadderOperators {
    Matrix a;
    Matrix a_dagger;
    Matrix number;
    Matrix hamiltonian;
};

/// (n_max + 1)-square matrices: a[n-1, n] = sqrt(n), N = diag(0..n_max),
/// H = hbar omega0 (N + I/2).
LadderOperators ladder_operators(const OscillatorModel &model);

/// Normalized n-th eigenfunction sampled on the model grid, computed with
/// the normalized three-term Hermite recurrence.
std::vector<double> hermite_eigenfunction(const OscillatorModel &model, int n);

/// Quadrature of f g with the model weights.
double grid_inner(const OscillatorModel &model, const std::vector<double> &f, const std::vector<double> &g);

/// Header "x,psi_0,...,psi_n".
void write_eigenfunctions_csv(const OscillatorModel &model, const std::vector<int> &levels, std::ostream &out);

/// Span of the listed number states in C^dim.
Subspace proposition_from_eigenstates(const std::vector<size_t> &indices, size_t dim);

void to_json(nlohmann::json &j, const TruthValue &t);

}  // namespace orthologic

#endif
