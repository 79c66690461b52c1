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

#include "orthologic/lattice_laws.h"

#include <cmath>

namespace orthologic {

std::string to_string(LawStatus s) {
    switch (s) {
        case LawStatus::holds:
            return "holds";
        case LawStatus::fails:
            return "fails";
        case LawStatus::not_applicable:
            return "not_applicable";
    }
    return "unknown";
}

void LawReport::absorb(const LawReport &other) {
    trials += other.trials;
    worst_residual = std::max(worst_residual, other.worst_residual);
    if (other.status == LawStatus::fails && status != LawStatus::fails) {
        status = LawStatus::fails;
        counterexample = other.counterexample;
        details = other.details;
    }
}

void to_json(nlohmann::json &j, const LawReport &r) {
    j = nlohmann::json{
        {"law", r.law},
        {"status", to_string(r.status)},
        {"trials", r.trials},
        {"worst_residual", r.worst_residual},
    };
    if (!r.counterexample.is_null()) {
        j["counterexample"] = r.counterexample;
    }
    if (!r.details.is_null()) {
        j["details"] = r.details;
    }
    if (!r.note.empty()) {
        j["note"] = r.note;
    }
}

LawReport check_covering(const Subspace &p, const Subspace &a, Rng &rng, size_t samples, const Tolerance &tol) {
    if (!is_atom(p)) {
        throw PreconditionViolated("covering law needs an atom");
    }
    if (meet(a, p, tol).dim() != 0) {
        throw PreconditionViolated("covering law needs a ^ p = 0");
    }
    LawReport r{.law = "covering"};
    Subspace top = join(a, p, tol);
    r.trials++;
    if (top.dim() != a.dim() + 1) {
        r.status = LawStatus::fails;
        r.counterexample = {{"p", p}, {"a", a}};
        r.note = "a v p does not have dimension dim(a) + 1";
        return r;
    }
    for (size_t s = 0; s < samples; s++) {
        Vector coeffs = rng.gaussian_vector(top.dim());
        Vector v = top.basis() * coeffs;
        Subspace b = join(a, ray(v, tol), tol);
        r.trials++;
        double residual = std::min(projector_distance(b, a), projector_distance(b, top));
        r.worst_residual = std::max(r.worst_residual, residual);
        if (!equal(b, a, tol) && !equal(b, top, tol)) {
            r.status = LawStatus::fails;
            r.counterexample = {{"p", p}, {"a", a}, {"b", b}};
            return r;
        }
    }
    return r;
}

bool is_modular_pair(const Subspace &p, const Subspace &q, size_t samples, uint64_t seed, const Tolerance &tol) {
    if (p.ambient_dim() != q.ambient_dim()) {
        throw DimensionMismatch("is_modular_pair: ambient dimensions differ");
    }
    Rng rng(seed);
    for (size_t s = 0; s < samples; s++) {
        for (size_t k = 0; k <= q.dim(); k++) {
            Subspace r = Subspace::zero(q.ambient_dim());
            if (k > 0) {
                Subspace inner_sub = random_subspace(q.dim(), k, rng);
                r = span_of(q.basis() * inner_sub.basis(), tol);
            }
            Subspace left = meet(join(p, r, tol), q, tol);
            Subspace right = join(meet(p, q, tol), r, tol);
            if (!equal(left, right, tol)) {
                return false;
            }
        }
    }
    return true;
}

bool projectors_commute(const Subspace &a, const Subspace &b, const Tolerance &tol) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw DimensionMismatch("projectors_commute: ambient dimensions differ");
    }
    Matrix pa = a.projector();
    Matrix pb = b.projector();
    double c = (pa * pb - pb * pa).frobenius_norm();
    return c < tol.eps_eq * static_cast<double>(a.ambient_dim());
}

}  // namespace orthologic
