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

#include "orthologic/truth.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace orthologic {

StateVector StateVector::normalize(const Vector &v, const Tolerance &tol) {
    if (!v.is_finite()) {
        throw NonFinite("state has non-finite entries");
    }
    double n = v.norm();
    if (n < tol.eps_rank) {
        throw ZeroState("state norm " + std::to_string(n) + " is below eps_rank");
    }
    return StateVector{v * Complex(1.0 / n), true};
}

std::string to_string(TruthClass c) {
    switch (c) {
        case TruthClass::false_value:
            return "false";
        case TruthClass::true_value:
            return "true";
        case TruthClass::probabilistic:
            return "probabilistic";
    }
    return "unknown";
}

Matrix projector(const Subspace &q) {
    return q.projector();
}

TruthValue truth_value(const StateVector &psi, const Subspace &q, const Tolerance &tol) {
    if (psi.vector.size() != q.ambient_dim()) {
        throw DimensionMismatch("state and proposition live in different dimensions");
    }
    Vector v = psi.vector;
    if (!psi.normalized || std::abs(v.norm() - 1) >= tol.eps_prob) {
        v = StateVector::normalize(v, tol).vector;
    }
    // |P psi|^2 = |B^dagger psi|^2 since B has orthonormal columns.
    double value = (q.basis().adjoint() * v).norm_squared();
    value = std::clamp(value, 0.0, 1.0);
    TruthValue t{value, TruthClass::probabilistic};
    if (value < tol.eps_prob) {
        t.classification = TruthClass::false_value;
    } else if (value > 1 - tol.eps_prob) {
        t.classification = TruthClass::true_value;
    }
    return t;
}

TruthValue truth_value(const Vector &psi, const Subspace &q, const Tolerance &tol) {
    return truth_value(StateVector::normalize(psi, tol), q, tol);
}

double OscillatorModel::natural_length() const {
    return std::sqrt(hbar / (mass * omega0));
}

OscillatorModel OscillatorModel::make(int n_max, double hbar, double mass, double omega0, size_t points) {
    if (n_max < 2) {
        throw InvalidParameter("n_max must be at least 2");
    }
    if (!(hbar > 0) || !(mass > 0) || !(omega0 > 0)) {
        throw InvalidParameter("hbar, m and omega0 must be positive");
    }
    if (points < 3 || points % 2 == 0) {
        throw InvalidParameter("grid needs an odd number of points, at least 3");
    }
    OscillatorModel m;
    m.n_max = n_max;
    m.hbar = hbar;
    m.mass = mass;
    m.omega0 = omega0;
    double extent = (std::sqrt(2.0 * n_max + 1) + 4) * m.natural_length();
    double h = 2 * extent / static_cast<double>(points - 1);
    size_t half = points / 2;
    for (size_t k = 0; k < points; k++) {
        // Built from the centre outwards so the grid is exactly symmetric.
        double offset = (static_cast<double>(k) - static_cast<double>(half)) * h;
        m.grid.push_back(offset);
        m.weights.push_back((k == 0 || k + 1 == points) ? h / 2 : h);
    }
    return m;
}

LadderOperators ladder_operators(const OscillatorModel &model) {
    if (model.n_max < 2) {
        throw InvalidParameter("n_max must be at least 2");
    }
    size_t n = static_cast<size_t>(model.n_max) + 1;
    LadderOperators ops{Matrix(n, n), Matrix(n, n), Matrix(n, n), Matrix(n, n)};
    for (size_t k = 1; k < n; k++) {
        ops.a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    ops.a_dagger = ops.a.adjoint();
    double e = model.hbar * model.omega0;
    for (size_t k = 0; k < n; k++) {
        ops.number(k, k) = static_cast<double>(k);
        ops.hamiltonian(k, k) = e * (static_cast<double>(k) + 0.5);
    }
    return ops;
}

std::vector<double> hermite_eigenfunction(const OscillatorModel &model, int n) {
    if (n < 0 || n > model.n_max) {
        throw InvalidIndex("eigenfunction index out of range");
    }
    double scale = std::sqrt(model.mass * model.omega0 / model.hbar);
    double prefactor = std::sqrt(scale);  // (m w / hbar)^(1/4)
    std::vector<double> out;
    out.reserve(model.grid.size());
    for (double x : model.grid) {
        double xi = scale * x;
        // phi_k(xi) are the unit-norm functions in xi.
        double prev = 0;
        double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * xi * xi);
        for (int k = 0; k < n; k++) {
            double next = std::sqrt(2.0 / (k + 1)) * xi * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
            prev = cur;
            cur = next;
        }
        out.push_back(prefactor * cur);
    }
    return out;
}

double grid_inner(const OscillatorModel &model, const std::vector<double> &f, const std::vector<double> &g) {
    if (f.size() != model.grid.size() || g.size() != model.grid.size()) {
        throw DimensionMismatch("sampled function does not match the grid");
    }
    double s = 0;
    for (size_t k = 0; k < f.size(); k++) {
        s += model.weights[k] * f[k] * g[k];
    }
    return s;
}

void write_eigenfunctions_csv(const OscillatorModel &model, const std::vector<int> &levels, std::ostream &out) {
    std::vector<std::vector<double>> columns;
    for (int n : levels) {
        columns.push_back(hermite_eigenfunction(model, n));
    }
    auto old = out.precision(17);
    out << "x";
    for (int n : levels) {
        out << ",psi_" << n;
    }
    out << "\n";
    for (size_t k = 0; k < model.grid.size(); k++) {
        out << model.grid[k];
        for (const auto &c : columns) {
            out << "," << c[k];
        }
        out << "\n";
    }
    out.precision(old);
}

Subspace proposition_from_eigenstates(const std::vector<size_t> &indices, size_t dim) {
    std::set<size_t> unique(indices.begin(), indices.end());
    for (size_t i : unique) {
        if (i >= dim) {
            throw InvalidIndex("eigenstate index " + std::to_string(i) + " not below " + std::to_string(dim));
        }
    }
    return coordinate_subspace(dim, std::vector<size_t>(unique.begin(), unique.end()));
}

void to_json(nlohmann::json &j, const TruthValue &t) {
    j = nlohmann::json{{"value", t.value}, {"classification", to_string(t.classification)}};
}

}  // namespace orthologic
