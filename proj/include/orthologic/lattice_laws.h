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

#ifndef ORTHOLOGIC_LATTICE_LAWS_H
#define ORTHOLOGIC_LATTICE_LAWS_H

#include <algorithm>
#include <concepts>
#include <string>
#include <vector>

#include "json.hpp"
#include "orthologic/subspace.h"

namespace orthologic {

/// Anything with the ortholattice operations. Subspace and ClassicalProp
/// both qualify.
template <typename T>
concept OrthoLattice = requires(const T &a, const T &b, const Tolerance &tol, nlohmann::json &j) {
    { meet(a, b, tol) } -> std::convertible_to<T>;
    { join(a, b, tol) } -> std::convertible_to<T>;
    { ortho(a, tol) } -> std::convertible_to<T>;
    { leq(a, b, tol) } -> std::convertible_to<bool>;
    { equal(a, b, tol) } -> std::convertible_to<bool>;
    { lattice_distance(a, b) } -> std::convertible_to<double>;
    to_json(j, a);
};

inline double lattice_distance(const Subspace &a, const Subspace &b) {
    return projector_distance(a, b);
}

enum class LawStatus { holds, fails, not_applicable };

/// Outcome of checking one identity. A failing report always carries the
/// elements that break it, so the failure can be re-checked independently.
struct LawReport {
    std::string law;
    LawStatus status = LawStatus::holds;
    size_t trials = 0;
    double worst_residual = 0;
    nlohmann::json counterexample;
    nlohmann::json details;
    std::string note;

    bool holds() const {
        return status == LawStatus::holds;
    }
    bool fails() const {
        return status == LawStatus::fails;
    }
    /// Folds another report of the same law into this one. The first failure
    /// and its counterexample win.
    void absorb(const LawReport &other);
};

std::string to_string(LawStatus s);
void to_json(nlohmann::json &j, const LawReport &r);

namespace detail {

template <OrthoLattice T>
void record_identity(LawReport &report, const T &left, const T &right, const Tolerance &tol) {
    report.trials++;
    report.worst_residual = std::max(report.worst_residual, lattice_distance(left, right));
    if (!equal(left, right, tol) && report.status != LawStatus::fails) {
        report.status = LawStatus::fails;
        report.details = {{"left", left}, {"right", right}};
    }
}

}  // namespace detail

/// a v (b ^ c) = (a v b) ^ (a v c).
template <OrthoLattice T>
LawReport check_distributive(const T &a, const T &b, const T &c, const Tolerance &tol = Tolerance{}) {
    LawReport r{.law = "distributive"};
    T left = join(a, meet(b, c, tol), tol);
    T right = meet(join(a, b, tol), join(a, c, tol), tol);
    detail::record_identity(r, left, right, tol);
    r.details = {{"left", left}, {"right", right}};
    if (r.fails()) {
        r.counterexample = {{"a", a}, {"b", b}, {"c", c}};
    }
    return r;
}

/// For p <= q: q = p v (q ^ p').
template <OrthoLattice T>
LawReport check_orthomodular(const T &p, const T &q, const Tolerance &tol = Tolerance{}) {
    if (!leq(p, q, tol)) {
        throw PreconditionViolated("orthomodular law needs p <= q");
    }
    LawReport r{.law = "orthomodular"};
    T right = join(p, meet(q, ortho(p, tol), tol), tol);
    detail::record_identity(r, q, right, tol);
    if (r.fails()) {
        r.counterexample = {{"p", p}, {"q", q}};
    }
    return r;
}

/// (a ^ b) v (a' ^ b) = b.
template <OrthoLattice T>
bool compatible(const T &a, const T &b, const Tolerance &tol = Tolerance{}) {
    T left = join(meet(a, b, tol), meet(ortho(a, tol), b, tol), tol);
    return equal(left, b, tol);
}

/// (a v b') ^ b = a ^ b. Equivalent to compatible() in an orthomodular lattice.
template <OrthoLattice T>
bool compatible_by_meet(const T &a, const T &b, const Tolerance &tol = Tolerance{}) {
    T left = meet(join(a, ortho(b, tol), tol), b, tol);
    return equal(left, meet(a, b, tol), tol);
}

/// When b is compatible with every a_i:  v_i (b ^ a_i) = b ^ (v_i a_i).
/// Not applicable otherwise.
template <OrthoLattice T>
LawReport check_foulis_distributivity(const T &b, const std::vector<T> &family, const Tolerance &tol = Tolerance{}) {
    LawReport r{.law = "foulis_distributivity"};
    if (family.empty()) {
        throw PreconditionViolated("foulis distributivity needs a nonempty family");
    }
    for (const auto &a : family) {
        if (!compatible(b, a, tol)) {
            r.status = LawStatus::not_applicable;
            r.note = "b is not compatible with every family member";
            return r;
        }
    }
    T left = meet(b, family[0], tol);
    T all = family[0];
    for (size_t i = 1; i < family.size(); i++) {
        left = join(left, meet(b, family[i], tol), tol);
        all = join(all, family[i], tol);
    }
    T right = meet(b, all, tol);
    detail::record_identity(r, left, right, tol);
    if (r.fails()) {
        r.counterexample = {{"b", b}, {"family", family}};
    }
    return r;
}

/// When one of a, b, c is compatible with the other two, all six
/// distributive identities among them hold. Not applicable otherwise.
template <OrthoLattice T>
LawReport check_triple_distributive(const T &a, const T &b, const T &c, const Tolerance &tol = Tolerance{}) {
    LawReport r{.law = "triple_distributive"};
    bool anchored = (compatible(a, b, tol) && compatible(a, c, tol)) ||
                    (compatible(b, a, tol) && compatible(b, c, tol)) ||
                    (compatible(c, a, tol) && compatible(c, b, tol));
    if (!anchored) {
        r.status = LawStatus::not_applicable;
        r.note = "no element is compatible with both others";
        return r;
    }
    const T *xs[3] = {&a, &b, &c};
    for (int k = 0; k < 3; k++) {
        const T &x = *xs[k];
        const T &y = *xs[(k + 1) % 3];
        const T &z = *xs[(k + 2) % 3];
        detail::record_identity(r, join(x, meet(y, z, tol), tol), meet(join(x, y, tol), join(x, z, tol), tol), tol);
        detail::record_identity(r, meet(x, join(y, z, tol), tol), join(meet(x, y, tol), meet(x, z, tol), tol), tol);
    }
    if (r.fails()) {
        r.counterexample = {{"a", a}, {"b", b}, {"c", c}};
    }
    return r;
}

/// (a ^ b)' = a' v b'  and  (a v b)' = a' ^ b'.
template <OrthoLattice T>
LawReport check_de_morgan(const T &a, const T &b, const Tolerance &tol = Tolerance{}) {
    LawReport r{.law = "de_morgan"};
    detail::record_identity(r, ortho(meet(a, b, tol), tol), join(ortho(a, tol), ortho(b, tol), tol), tol);
    detail::record_identity(r, ortho(join(a, b, tol), tol), meet(ortho(a, tol), ortho(b, tol), tol), tol);
    if (r.fails()) {
        r.counterexample = {{"a", a}, {"b", b}};
    }
    return r;
}

/// Involution, a ^ a' = 0 and a v a' = 1.
template <OrthoLattice T>
LawReport check_orthocomplement(const T &a, const T &zero, const T &one, const Tolerance &tol = Tolerance{}) {
    LawReport r{.law = "orthocomplement"};
    detail::record_identity(r, ortho(ortho(a, tol), tol), a, tol);
    detail::record_identity(r, meet(a, ortho(a, tol), tol), zero, tol);
    detail::record_identity(r, join(a, ortho(a, tol), tol), one, tol);
    if (r.fails()) {
        r.counterexample = {{"a", a}};
    }
    return r;
}

/// Atom p not below a: nothing lies strictly between a and a v p.
/// Candidates are a v <v> for random v in a v p, which must equal a or a v p.
LawReport check_covering(const Subspace &p, const Subspace &a, Rng &rng, size_t samples = 8,
                         const Tolerance &tol = Tolerance{});

/// (p v r) ^ q = (p ^ q) v r for sampled r <= q of every dimension.
bool is_modular_pair(const Subspace &p, const Subspace &q, size_t samples, uint64_t seed,
                     const Tolerance &tol = Tolerance{});

/// Test oracle for compatibility: the two orthogonal projectors commute.
bool projectors_commute(const Subspace &a, const Subspace &b, const Tolerance &tol = Tolerance{});

}  // namespace orthologic

#endif
