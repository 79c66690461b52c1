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

#include "orthologic/composite.h"

#include <cmath>

namespace orthologic {

std::string to_string(Linearity l) {
    switch (l) {
        case Linearity::linear:
            return "linear";
        case Linearity::antilinear:
            return "antilinear";
        case Linearity::gemischt:
            return "gemischt";
        case Linearity::unknown:
            return "unknown";
    }
    return "unknown";
}

std::string to_string(Axiom a) {
    switch (a) {
        case Axiom::I_c_morphism:
            return "I_c_morphism";
        case Axiom::II_compatibility:
            return "II_compatibility";
        case Axiom::III_atoms:
            return "III_atoms";
    }
    return "unknown";
}

std::string to_string(BasisMapCase c) {
    switch (c) {
        case BasisMapCase::phi:
            return "phi";
        case BasisMapCase::psi:
            return "psi";
        case BasisMapCase::mu:
            return "mu";
        case BasisMapCase::nu:
            return "nu";
    }
    return "unknown";
}

Subspace SubspaceMorphism::operator()(const Subspace &p) const {
    if (p.ambient_dim() != source_dim) {
        throw DimensionMismatch("morphism " + name + " expects subspaces of C^" + std::to_string(source_dim));
    }
    Subspace out = map(p);
    if (out.ambient_dim() != target_dim) {
        throw DimensionMismatch("morphism " + name + " produced a subspace of the wrong ambient dimension");
    }
    return out;
}

Subspace SubspaceMorphism::of_ray(const Vector &x, const Tolerance &tol) const {
    return (*this)(ray(x, tol));
}

SubspaceMorphism canonical_h(int side, size_t d1, size_t d2, const std::optional<Matrix> &twist, bool conjugate) {
    if (side != 1 && side != 2) {
        throw InvalidParameter("side must be 1 or 2");
    }
    if (d1 < 1 || d2 < 1) {
        throw InvalidDimension("factor dimensions must be positive");
    }
    size_t n = d1 * d2;
    if (twist) {
        if (twist->rows() != n || twist->cols() != n) {
            throw DimensionMismatch("twist must act on C^(d1 d2)");
        }
        double err = (twist->adjoint() * *twist - Matrix::identity(n)).frobenius_norm();
        if (err > 1e-10 * static_cast<double>(n)) {
            throw InvalidParameter("twist is not unitary");
        }
    }
    SubspaceMorphism h;
    h.source_dim = side == 1 ? d1 : d2;
    h.target_dim = n;
    h.linearity = conjugate ? Linearity::antilinear : Linearity::linear;
    h.name = "h" + std::to_string(side) + (conjugate ? " antilinear" : " linear") + (twist ? " twisted" : "");
    if (d1 < 3 || d2 < 3) {
        h.warning = "factor dimension below 3; the tensor identification is only guaranteed from dimension 3";
    }
    Matrix id1 = Matrix::identity(d1);
    Matrix id2 = Matrix::identity(d2);
    h.map = [side, conjugate, twist, id1, id2](const Subspace &p) {
        Matrix b = conjugate ? p.basis().conj() : p.basis();
        Matrix cyl = side == 1 ? kron(b, id2) : kron(id1, b);
        if (twist) {
            cyl = *twist * cyl;
        }
        return Subspace::from_orthonormal(std::move(cyl));
    };
    return h;
}

void to_json(nlohmann::json &j, const AxiomReport &r) {
    j = nlohmann::json{
        {"axiom", to_string(r.axiom)},
        {"passed", r.passed},
        {"samples", r.samples},
        {"worst_residual", r.worst_residual},
    };
    if (!r.counterexample.is_null()) {
        j["counterexample"] = r.counterexample;
    }
}

namespace {

struct CheckOutcome {
    bool ok;
    double residual;
};

double commutator_norm(const Subspace &a, const Subspace &b) {
    Matrix pa = a.projector();
    Matrix pb = b.projector();
    return (pa * pb - pb * pa).frobenius_norm();
}

CheckOutcome equality(const Subspace &a, const Subspace &b, const Tolerance &tol) {
    return {equal(a, b, tol), projector_distance(a, b)};
}

// Shared by verify_axioms and recheck_axiom so stored counterexamples are
// evaluated exactly as they were found.
CheckOutcome evaluate_check(const std::string &check, int side, const std::vector<Subspace> &subs,
                            const SubspaceMorphism &h1, const SubspaceMorphism &h2, const Tolerance &tol) {
    const SubspaceMorphism &h = side == 2 ? h2 : h1;
    size_t n = h1.target_dim;
    if (check == "unitarity") {
        return equality(h(Subspace::full(h.source_dim)), Subspace::full(n), tol);
    }
    if (check == "zero") {
        Subspace z = h(Subspace::zero(h.source_dim));
        return {z.dim() == 0, static_cast<double>(z.dim())};
    }
    if (check == "join") {
        Subspace all = subs.at(0);
        Subspace images = h(subs.at(0));
        for (size_t k = 1; k < subs.size(); k++) {
            all = join(all, subs[k], tol);
            images = join(images, h(subs[k]), tol);
        }
        return equality(h(all), images, tol);
    }
    if (check == "complement") {
        const Subspace &p = subs.at(0);
        Subspace right = meet(ortho(h(p), tol), h(Subspace::full(h.source_dim)), tol);
        return equality(h(ortho(p, tol)), right, tol);
    }
    if (check == "compatibility_preserved") {
        Subspace a = h(subs.at(0));
        Subspace b = h(subs.at(1));
        return {projectors_commute(a, b, tol), commutator_norm(a, b)};
    }
    if (check == "cross_compatibility") {
        Subspace a = h1(subs.at(0));
        Subspace b = h2(subs.at(1));
        return {projectors_commute(a, b, tol), commutator_norm(a, b)};
    }
    if (check == "atom_meet") {
        Subspace m = meet(h1(subs.at(0)), h2(subs.at(1)), tol);
        return {m.dim() == 1, std::abs(static_cast<double>(m.dim()) - 1)};
    }
    throw InvalidParameter("unknown axiom check '" + check + "'");
}

void run_check(AxiomReport &report, const std::string &check, int side, const std::vector<Subspace> &subs,
               const SubspaceMorphism &h1, const SubspaceMorphism &h2, const Tolerance &tol) {
    CheckOutcome o = evaluate_check(check, side, subs, h1, h2, tol);
    report.samples++;
    report.worst_residual = std::max(report.worst_residual, o.residual);
    if (!o.ok && report.passed) {
        report.passed = false;
        report.counterexample = {{"check", check}, {"side", side}, {"subspaces", subs}};
    }
}

Subspace random_any_dim(size_t d, Rng &rng) {
    return random_subspace(d, rng.below(d + 1), rng);
}

// Spans of two random subsets of the columns of one random unitary: their
// projectors commute.
std::pair<Subspace, Subspace> random_compatible_pair(size_t d, Rng &rng) {
    Matrix u = random_unitary(d, rng);
    std::vector<Vector> a;
    std::vector<Vector> b;
    for (size_t c = 0; c < d; c++) {
        uint64_t bits = rng.next_u64();
        if (bits & 1) {
            a.push_back(u.col(c));
        }
        if (bits & 2) {
            b.push_back(u.col(c));
        }
    }
    return {span_of(a, d), span_of(b, d)};
}

}  // namespace

std::vector<AxiomReport> verify_axioms(const SubspaceMorphism &h1, const SubspaceMorphism &h2, size_t trials,
                                       uint64_t seed, const Tolerance &tol) {
    if (h1.target_dim != h2.target_dim) {
        throw DimensionMismatch("h1 and h2 must share a target space");
    }
    AxiomReport one{Axiom::I_c_morphism};
    AxiomReport two{Axiom::II_compatibility};
    AxiomReport three{Axiom::III_atoms};
    for (int side = 1; side <= 2; side++) {
        run_check(one, "unitarity", side, {}, h1, h2, tol);
        run_check(one, "zero", side, {}, h1, h2, tol);
    }
    for (size_t t = 0; t < trials; t++) {
        Rng rng(derive_seed(seed, "axiom-I", t));
        for (int side = 1; side <= 2; side++) {
            size_t d = side == 1 ? h1.source_dim : h2.source_dim;
            std::vector<Subspace> family;
            size_t m = 2 + rng.below(2);
            for (size_t k = 0; k < m; k++) {
                family.push_back(random_any_dim(d, rng));
            }
            run_check(one, "join", side, family, h1, h2, tol);
            run_check(one, "complement", side, {random_any_dim(d, rng)}, h1, h2, tol);
            auto [p, q] = random_compatible_pair(d, rng);
            run_check(one, "compatibility_preserved", side, {p, q}, h1, h2, tol);
        }
        Rng rng2(derive_seed(seed, "axiom-II", t));
        Subspace p1 = random_any_dim(h1.source_dim, rng2);
        Subspace p2 = random_any_dim(h2.source_dim, rng2);
        run_check(two, "cross_compatibility", 0, {p1, p2}, h1, h2, tol);
        Rng rng3(derive_seed(seed, "axiom-III", t));
        Subspace r1 = random_subspace(h1.source_dim, 1, rng3);
        Subspace r2 = random_subspace(h2.source_dim, 1, rng3);
        run_check(three, "atom_meet", 0, {r1, r2}, h1, h2, tol);
    }
    return {one, two, three};
}

bool recheck_axiom(const AxiomReport &report, const SubspaceMorphism &h1, const SubspaceMorphism &h2,
                   const Tolerance &tol) {
    if (report.passed || report.counterexample.is_null()) {
        return false;
    }
    std::vector<Subspace> subs = report.counterexample.at("subspaces").get<std::vector<Subspace>>();
    CheckOutcome o = evaluate_check(report.counterexample.at("check").get<std::string>(),
                                    report.counterexample.at("side").get<int>(), subs, h1, h2, tol);
    return !o.ok;
}

Intertwiner::Intertwiner(Subspace domain, Subspace codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
}

Vector Intertwiner::operator()(const Vector &t, const Tolerance &tol) const {
    if (!domain_.contains(t, tol)) {
        throw NotInDomain("vector is not in the domain of the intertwiner");
    }
    return matrix_ * t;
}

Matrix Intertwiner::extended() const {
    size_t n = domain_.ambient_dim();
    return matrix_ + (Matrix::identity(n) - domain_.projector());
}

Matrix Intertwiner::restricted() const {
    return codomain_.basis().adjoint() * matrix_ * domain_.basis();
}

namespace {

bool independent(const Vector &x, const Vector &y, const Tolerance &tol) {
    return rank(std::vector<Vector>{x, y}, x.size(), tol) == 2;
}

// Standard basis vector least aligned with x.
Vector auxiliary_vector(const Vector &x) {
    size_t best = 0;
    for (size_t k = 1; k < x.size(); k++) {
        if (std::abs(x[k]) < std::abs(x[best])) {
            best = k;
        }
    }
    return Vector::unit(x.size(), best);
}

Intertwiner direct_intertwiner(const SubspaceMorphism &h, const Vector &y, const Vector &x, const Tolerance &tol) {
    Subspace dom = h.of_ray(x, tol);
    Subspace cod = h.of_ray(y, tol);
    Subspace rest = h.of_ray(x - y, tol);
    Matrix m = hcat(cod.basis(), rest.basis());
    if (m.cols() > m.rows()) {
        throw PreconditionViolated("h(<y>) + h(<x - y>) is not a direct sum");
    }
    std::vector<Vector> images;
    for (size_t c = 0; c < dom.dim(); c++) {
        Vector t = dom.basis().col(c);
        LeastSquares ls{Vector(), 0};
        try {
            ls = least_squares(m, t);
        } catch (const PreconditionViolated &) {
            throw PreconditionViolated("h(<y>) + h(<x - y>) is not a direct sum");
        }
        if (ls.residual > tol.eps_eq) {
            throw PreconditionViolated("h(<x>) is not contained in h(<y>) + h(<x - y>)");
        }
        Vector s(cod.dim());
        for (size_t k = 0; k < cod.dim(); k++) {
            s[k] = ls.coefficients[k];
        }
        images.push_back(cod.basis() * s);
    }
    Matrix y_img = Matrix::from_columns(dom.ambient_dim(), images);
    return Intertwiner(dom, cod, y_img * dom.basis().adjoint());
}

void require_nonzero(const Vector &v, const Tolerance &tol, const char *what) {
    if (!(v.norm() >= tol.eps_rank)) {
        throw ZeroState(std::string(what) + " must be nonzero");
    }
}

}  // namespace

Intertwiner intertwiner(const SubspaceMorphism &h, const Vector &y, const Vector &x, const Tolerance &tol) {
    require_nonzero(x, tol, "x");
    require_nonzero(y, tol, "y");
    if (x.size() != h.source_dim || y.size() != h.source_dim) {
        throw DimensionMismatch("intertwiner arguments must live in the source space");
    }
    if (independent(x, y, tol)) {
        return direct_intertwiner(h, y, x, tol);
    }
    Complex lambda = inner(x, y) / inner(x, x);
    if (std::abs(lambda - Complex(1)) <= tol.eps_rank) {
        Subspace dom = h.of_ray(x, tol);
        return Intertwiner(dom, dom, dom.projector());
    }
    if (h.source_dim < 2) {
        throw PreconditionViolated("parallel arguments need a source of dimension at least 2");
    }
    Vector w = auxiliary_vector(x) * Complex(x.norm());
    Intertwiner first = direct_intertwiner(h, w, x, tol);
    Intertwiner second = direct_intertwiner(h, y, w, tol);
    return Intertwiner(first.domain(), second.codomain(), second.matrix() * first.matrix());
}

ScalarAction scalar_action(const SubspaceMorphism &h, const Vector &x, const Tolerance &tol) {
    const Complex i(0, 1);
    Intertwiner f = intertwiner(h, i * x, x, tol);
    Matrix pd = f.domain().projector();
    // F_{ix,x} = i P1 - i P2 and P1 + P2 = id on h(<x>).
    Matrix p1 = Complex(0.5) * (pd - i * f.matrix());
    Matrix p2 = Complex(0.5) * (pd + i * f.matrix());
    return {p1, p2};
}

Linearity classify_linearity(const SubspaceMorphism &h, size_t probes, uint64_t seed, const Tolerance &tol) {
    bool all_linear = true;
    bool all_antilinear = true;
    for (size_t t = 0; t < std::max<size_t>(probes, 1); t++) {
        Rng rng(derive_seed(seed, "classify", t));
        Vector x = rng.gaussian_vector(h.source_dim);
        Complex random_lambda = rng.complex_gaussian();
        if (std::abs(random_lambda.imag()) < 0.1) {
            random_lambda += Complex(0, 0.5);
        }
        for (Complex lambda : {Complex(0, 1), random_lambda}) {
            Intertwiner f = intertwiner(h, lambda * x, x, tol);
            Matrix pd = f.domain().projector();
            double scale = std::abs(lambda);
            double e_lin = (f.matrix() - lambda * pd).frobenius_norm() / scale;
            double e_anti = (f.matrix() - std::conj(lambda) * pd).frobenius_norm() / scale;
            double limit = tol.eps_eq * static_cast<double>(h.target_dim);
            all_linear = all_linear && e_lin < limit;
            all_antilinear = all_antilinear && e_anti < limit;
        }
    }
    if (all_linear) {
        return Linearity::linear;
    }
    if (all_antilinear) {
        return Linearity::antilinear;
    }
    return Linearity::gemischt;
}

namespace {

double distance_to(const Subspace &s, const Vector &v) {
    return (v - s.project(v)).norm();
}

void require_independent_pair(const Vector &x, const Vector &y, const Tolerance &tol, const char *what) {
    if (x.norm() < tol.eps_rank || y.norm() < tol.eps_rank || !independent(x, y, tol)) {
        throw PreconditionViolated(std::string(what) + " must be nonzero and linearly independent");
    }
}

LawReport commutation_report(const SubspaceMorphism &h1, const SubspaceMorphism &h2, const Intertwiner &f,
                             const Intertwiner &k, const Vector &x1, const Vector &y1, const Vector &x2,
                             const Vector &y2, const Tolerance &tol) {
    Subspace start = meet(h1.of_ray(x1, tol), h2.of_ray(x2, tol), tol);
    if (start.dim() != 1) {
        throw PreconditionViolated("h1(<x1>) ^ h2(<x2>) is not an atom");
    }
    LawReport r{.law = "intertwiner_commutation"};
    nlohmann::json inputs = {{"x1", vector_to_json(x1)},
                             {"y1", vector_to_json(y1)},
                             {"x2", vector_to_json(x2)},
                             {"y2", vector_to_json(y2)}};
    Vector x = start.basis().col(0);
    Vector fx = f(x, tol);
    Vector kx = k(x, tol);
    Subspace f_meet = meet(h1.of_ray(y1, tol), h2.of_ray(x2, tol), tol);
    Subspace k_meet = meet(h1.of_ray(x1, tol), h2.of_ray(y2, tol), tol);
    double membership = std::max(distance_to(f_meet, fx), distance_to(k_meet, kx));
    r.trials++;
    r.worst_residual = membership;
    if (membership > tol.eps_eq) {
        r.status = LawStatus::fails;
        r.counterexample = inputs;
        r.note = "an intertwiner image left the expected meet";
        return r;
    }
    Vector fk;
    Vector kf;
    try {
        fk = f(kx, tol);
        kf = k(fx, tol);
    } catch (const NotInDomain &) {
        r.status = LawStatus::fails;
        r.counterexample = inputs;
        r.note = "composition left the domain of the second map";
        return r;
    }
    double diff = (fk - kf).norm();
    r.trials++;
    r.worst_residual = std::max(r.worst_residual, diff);
    if (diff > tol.eps_eq) {
        r.status = LawStatus::fails;
        r.counterexample = inputs;
    }
    r.details = {{"fk", vector_to_json(fk)}, {"kf", vector_to_json(kf)}};
    return r;
}

}  // namespace

LawReport check_commutation(const SubspaceMorphism &h1, const SubspaceMorphism &h2, const Vector &x1, const Vector &y1,
                            const Vector &x2, const Vector &y2, const Tolerance &tol) {
    require_independent_pair(x1, y1, tol, "x1, y1");
    require_independent_pair(x2, y2, tol, "x2, y2");
    Intertwiner f = intertwiner(h1, y1, x1, tol);
    Intertwiner k = intertwiner(h2, y2, x2, tol);
    return commutation_report(h1, h2, f, k, x1, y1, x2, y2, tol);
}

LawReport check_scalar_commutation(const SubspaceMorphism &h1, const SubspaceMorphism &h2, const Vector &x1,
                                   Complex lambda, const Vector &x2, const Vector &y2, const Tolerance &tol) {
    if (x1.norm() < tol.eps_rank || std::abs(lambda) < tol.eps_rank) {
        throw PreconditionViolated("x1 and lambda must be nonzero");
    }
    require_independent_pair(x2, y2, tol, "x2, y2");
    Vector y1 = lambda * x1;
    Intertwiner f = intertwiner(h1, y1, x1, tol);
    Intertwiner k = intertwiner(h2, y2, x2, tol);
    return commutation_report(h1, h2, f, k, x1, y1, x2, y2, tol);
}

LawReport check_m_morphism(const SubspaceMorphism &h, size_t trials, uint64_t seed, const Tolerance &tol) {
    LawReport r{.law = "m_morphism"};
    if (h.source_dim < 2) {
        r.status = LawStatus::not_applicable;
        r.note = "a one-dimensional source has no independent pairs";
        return r;
    }
    for (size_t t = 0; t < trials; t++) {
        Rng rng(derive_seed(seed, "m-morphism", t));
        Vector x = rng.gaussian_vector(h.source_dim);
        Vector y = rng.gaussian_vector(h.source_dim);
        Subspace hx = h.of_ray(x, tol);
        Subspace hy = h.of_ray(y, tol);
        Subspace hd = h.of_ray(x - y, tol);
        Subspace sum = join(hx, hy, tol);
        Matrix residual = sum.projector() * hd.basis() - hd.basis();
        r.trials++;
        r.worst_residual = std::max(r.worst_residual, residual.frobenius_norm());
        std::string broken;
        if (!leq(hd, sum, tol)) {
            broken = "containment";
        } else if (sum.dim() != hx.dim() + hy.dim()) {
            broken = "direct_sum";
        }
        if (!broken.empty()) {
            r.status = LawStatus::fails;
            r.counterexample = {{"x", vector_to_json(x)}, {"y", vector_to_json(y)}, {"check", broken}};
            r.note = broken == "direct_sum" ? "h(<x>) and h(<y>) overlap, so their sum is not direct"
                                            : "h(<x - y>) is not inside h(<x>) v h(<y>)";
            return r;
        }
    }
    return r;
}

RestrictionMap restriction_iso(const SubspaceMorphism &h, const SubspaceMorphism &other, const Vector &x,
                               const Tolerance &tol) {
    if (x.norm() < tol.eps_rank) {
        throw ZeroState("restriction needs a nonzero vector");
    }
    Subspace slice = other.of_ray(x, tol);
    RestrictionMap r{slice, nullptr};
    r.map = [h, slice, tol](const Subspace &p) { return meet(h(p), slice, tol); };
    return r;
}

RestrictionMap restriction_iso_u(const SubspaceMorphism &h1, const SubspaceMorphism &h2, const Vector &x2,
                                 const Tolerance &tol) {
    return restriction_iso(h1, h2, x2, tol);
}

LawReport verify_restriction_iso(const SubspaceMorphism &h, const SubspaceMorphism &other, const Vector &x,
                                 size_t trials, uint64_t seed, const Tolerance &tol) {
    RestrictionMap u = restriction_iso(h, other, x, tol);
    LawReport r{.law = "restriction_isomorphism"};
    size_t d = h.source_dim;
    detail::record_identity(r, u.map(Subspace::full(d)), u.slice, tol);
    for (size_t t = 0; t < trials && !r.fails(); t++) {
        Rng rng(derive_seed(seed, "restriction", t));
        Subspace p = random_any_dim(d, rng);
        Subspace q = random_any_dim(d, rng);
        Subspace up = u.map(p);
        r.trials++;
        if (up.dim() != p.dim()) {
            r.status = LawStatus::fails;
            r.counterexample = {{"p", p}};
            r.note = "dimension not preserved";
            break;
        }
        detail::record_identity(r, u.map(join(p, q, tol)), join(up, u.map(q), tol), tol);
        if (r.fails()) {
            r.counterexample = {{"p", p}, {"q", q}};
        }
    }
    return r;
}

Anchors default_anchors(const SubspaceMorphism &h1, const SubspaceMorphism &h2, const Tolerance &tol) {
    Anchors a{Vector::unit(h1.source_dim, 0), Vector::unit(h2.source_dim, 0), Vector()};
    Subspace m = meet(h1.of_ray(a.z1, tol), h2.of_ray(a.z2, tol), tol);
    if (m.dim() != 1) {
        throw AnchorNotInMeet("h1(<z1>) ^ h2(<z2>) is not an atom");
    }
    Vector z = m.basis().col(0);
    size_t big = 0;
    for (size_t k = 1; k < z.size(); k++) {
        if (std::abs(z[k]) > std::abs(z[big])) {
            big = k;
        }
    }
    z *= std::conj(z[big]) / std::abs(z[big]);
    z[big] = std::abs(z[big]);
    a.z = z;
    return a;
}

UVMaps::UVMaps(SubspaceMorphism h1, SubspaceMorphism h2, Anchors anchors, Tolerance tol)
    : h1_(std::move(h1)), h2_(std::move(h2)), anchors_(std::move(anchors)), tol_(tol) {
    require_nonzero(anchors_.z1, tol_, "anchor z1");
    require_nonzero(anchors_.z2, tol_, "anchor z2");
    require_nonzero(anchors_.z, tol_, "anchor z");
    Subspace m = meet(h1_.of_ray(anchors_.z1, tol_), h2_.of_ray(anchors_.z2, tol_), tol_);
    if (anchors_.z.size() != h1_.target_dim || !m.contains(anchors_.z, tol_)) {
        throw AnchorNotInMeet("anchor z is not in h1(<z1>) ^ h2(<z2>)");
    }
    alpha_ = anchors_.z1.norm() * anchors_.z2.norm() / anchors_.z.norm();
}

Vector UVMaps::U(const Vector &x2, const Vector &x1) const {
    require_nonzero(x2, tol_, "x2");
    if (x1.norm() == 0) {
        return Vector(h1_.target_dim);
    }
    Vector kz = intertwiner(h2_, x2, anchors_.z2, tol_)(anchors_.z, tol_);
    Vector out = intertwiner(h1_, x1, anchors_.z1, tol_)(kz, tol_);
    return out * Complex(alpha_ / x2.norm());
}

Vector UVMaps::V(const Vector &x1, const Vector &x2) const {
    require_nonzero(x1, tol_, "x1");
    if (x2.norm() == 0) {
        return Vector(h1_.target_dim);
    }
    Vector fz = intertwiner(h1_, x1, anchors_.z1, tol_)(anchors_.z, tol_);
    Vector out = intertwiner(h2_, x2, anchors_.z2, tol_)(fz, tol_);
    return out * Complex(alpha_ / x1.norm());
}

UVMaps build_U_V(const SubspaceMorphism &h1, const SubspaceMorphism &h2, const Anchors &anchors,
                 const Tolerance &tol) {
    return UVMaps(h1, h2, anchors, tol);
}

namespace {

void require_unitary(const Matrix &b, size_t d, const Tolerance &tol, const char *what) {
    if (b.rows() != d || b.cols() != d) {
        throw NotOrthonormal(std::string(what) + " must hold a full basis as columns");
    }
    if ((b.adjoint() * b - Matrix::identity(d)).frobenius_norm() > tol.eps_eq) {
        throw NotOrthonormal(std::string(what) + " is not orthonormal");
    }
}

}  // namespace

std::vector<Vector> composite_onb(const UVMaps &uv, const Matrix &basis1, const Matrix &basis2,
                                  const Tolerance &tol) {
    size_t d1 = uv.anchors().z1.size();
    size_t d2 = uv.anchors().z2.size();
    require_unitary(basis1, d1, tol, "basis1");
    require_unitary(basis2, d2, tol, "basis2");
    std::vector<Vector> out;
    out.reserve(d1 * d2);
    for (size_t i = 0; i < d1; i++) {
        Vector e = basis1.col(i);
        for (size_t j = 0; j < d2; j++) {
            out.push_back(uv.U(basis2.col(j), e));
        }
    }
    return out;
}

BasisMap::BasisMap(BasisMapCase kind, TensorIndex index, Matrix basis1, Matrix basis2, std::vector<Vector> images)
    : kind_(kind), index_(index), basis1_(std::move(basis1)), basis2_(std::move(basis2)) {
    index_.dual_first_factor = dual_domain();
    size_t n = index_.size();
    if (images.size() != n) {
        throw DimensionMismatch("basis map needs one image per tensor basis vector");
    }
    images_ = Matrix::from_columns(n, images);
    domain_basis_ = Matrix(n, n);
    for (size_t i = 0; i < index_.d1; i++) {
        Vector e = basis1_.col(i);
        if (dual_domain()) {
            e = riesz(e).coordinates;
        }
        for (size_t j = 0; j < index_.d2; j++) {
            domain_basis_.set_col(index_.flatten(i, j), kron(e, basis2_.col(j)));
        }
    }
}

std::string BasisMap::target() const {
    return dual_domain() ? "H1*⊗H2" : "H1⊗H2";
}

Vector BasisMap::apply(const Vector &v) const {
    if (v.size() != index_.size()) {
        throw DimensionMismatch("basis map input has the wrong size");
    }
    Vector c = domain_basis_.adjoint() * v;
    if (conjugates()) {
        c = c.conj();
    }
    return images_ * c;
}

Vector BasisMap::apply_inverse(const Vector &w) const {
    if (w.size() != index_.size()) {
        throw DimensionMismatch("basis map inverse input has the wrong size");
    }
    Vector c = images_.adjoint() * w;
    if (conjugates()) {
        c = c.conj();
    }
    return domain_basis_ * c;
}

Subspace BasisMap::lift(const Subspace &g, const Tolerance &tol) const {
    std::vector<Vector> cols;
    for (size_t c = 0; c < g.dim(); c++) {
        cols.push_back(apply(g.basis().col(c)));
    }
    return span_of(cols, index_.size(), tol);
}

Subspace BasisMap::lift_inverse(const Subspace &g, const Tolerance &tol) const {
    std::vector<Vector> cols;
    for (size_t c = 0; c < g.dim(); c++) {
        cols.push_back(apply_inverse(g.basis().col(c)));
    }
    return span_of(cols, index_.size(), tol);
}

Subspace BasisMap::first_cylinder(const Subspace &p) const {
    Matrix b = dual_domain() ? p.basis().conj() : p.basis();
    return Subspace::from_orthonormal(kron(b, Matrix::identity(index_.d2)));
}

Subspace BasisMap::second_cylinder(const Subspace &q) const {
    return Subspace::from_orthonormal(kron(Matrix::identity(index_.d1), q.basis()));
}

BasisMap build_basis_map(const SubspaceMorphism &h1, const SubspaceMorphism &h2, const UVMaps &uv,
                         const Matrix &basis1, const Matrix &basis2, const Tolerance &tol) {
    for (const auto *h : {&h1, &h2}) {
        if (h->linearity == Linearity::unknown) {
            throw UnknownLinearity("linearity of " + h->name + " is not known");
        }
        if (h->linearity == Linearity::gemischt) {
            throw MixedLinearity(h->name + " is neither linear nor antilinear");
        }
    }
    bool lin1 = h1.linearity == Linearity::linear;
    bool lin2 = h2.linearity == Linearity::linear;
    BasisMapCase kind = lin1 && lin2   ? BasisMapCase::phi
                        : !lin1 && !lin2 ? BasisMapCase::psi
                        : !lin1          ? BasisMapCase::mu
                                         : BasisMapCase::nu;
    std::vector<Vector> images = composite_onb(uv, basis1, basis2, tol);
    return BasisMap(kind, TensorIndex(h1.source_dim, h2.source_dim), basis1, basis2, std::move(images));
}

std::string TensorIsomorphismReport::target() const {
    return (kind == BasisMapCase::mu || kind == BasisMapCase::nu) ? "H1*⊗H2" : "H1⊗H2";
}

bool TensorIsomorphismReport::passed() const {
    for (const auto &a : axioms) {
        if (!a.passed) {
            return false;
        }
    }
    for (const auto &c : checks) {
        if (!c.holds()) {
            return false;
        }
    }
    return true;
}

double TensorIsomorphismReport::worst_residual() const {
    double w = 0;
    for (const auto &a : axioms) {
        w = std::max(w, a.worst_residual);
    }
    for (const auto &c : checks) {
        w = std::max(w, c.worst_residual);
    }
    return w;
}

void to_json(nlohmann::json &j, const TensorIsomorphismReport &r) {
    j = nlohmann::json{
        {"case", to_string(r.kind)},
        {"target", r.target()},
        {"linearity_h1", to_string(r.linearity1)},
        {"linearity_h2", to_string(r.linearity2)},
        {"axioms", r.axioms},
        {"checks", r.checks},
        {"passed", r.passed()},
        {"worst_residual", r.worst_residual()},
    };
    if (!r.warnings.empty()) {
        j["warnings"] = r.warnings;
    }
}

namespace {

void record_value(LawReport &r, double residual, bool ok, nlohmann::json counterexample) {
    r.trials++;
    r.worst_residual = std::max(r.worst_residual, residual);
    if (!ok && !r.fails()) {
        r.status = LawStatus::fails;
        r.counterexample = std::move(counterexample);
    }
}

void record_equal(LawReport &r, const Subspace &a, const Subspace &b, const Tolerance &tol,
                  nlohmann::json counterexample) {
    record_value(r, projector_distance(a, b), equal(a, b, tol), std::move(counterexample));
}

}  // namespace

TensorIsomorphismReport verify_tensor_isomorphism(const SubspaceMorphism &h1, const SubspaceMorphism &h2, size_t trials, uint64_t seed,
                                 const Tolerance &tol) {
    TensorIsomorphismReport report;
    report.axioms = verify_axioms(h1, h2, trials, seed, tol);
    std::vector<int> broken;
    std::string msg;
    for (size_t k = 0; k < report.axioms.size(); k++) {
        if (!report.axioms[k].passed) {
            broken.push_back(static_cast<int>(k) + 1);
            msg += (msg.empty() ? "" : "; ") + to_string(report.axioms[k].axiom) + " fails";
        }
    }
    if (!broken.empty()) {
        throw AxiomViolation(broken, msg);
    }

    SubspaceMorphism g1 = h1;
    SubspaceMorphism g2 = h2;
    if (g1.linearity == Linearity::unknown) {
        g1.linearity = classify_linearity(g1, 4, derive_seed(seed, "classify-h1", 0), tol);
    }
    if (g2.linearity == Linearity::unknown) {
        g2.linearity = classify_linearity(g2, 4, derive_seed(seed, "classify-h2", 0), tol);
    }
    report.linearity1 = g1.linearity;
    report.linearity2 = g2.linearity;
    for (const auto *h : {&g1, &g2}) {
        if (!h->warning.empty()) {
            report.warnings.push_back(h->name + ": " + h->warning);
        }
    }

    size_t d1 = g1.source_dim;
    size_t d2 = g2.source_dim;
    size_t n = g1.target_dim;
    UVMaps uv = build_U_V(g1, g2, default_anchors(g1, g2, tol), tol);
    BasisMap phi = build_basis_map(g1, g2, uv, Matrix::identity(d1), Matrix::identity(d2), tol);
    report.kind = phi.kind();

    LawReport joins{.law = "lift_preserves_join"};
    LawReport meets{.law = "lift_preserves_meet"};
    LawReport orthos{.law = "lift_preserves_ortho"};
    LawReport order{.law = "lift_preserves_order"};
    LawReport atoms{.law = "lift_preserves_atoms"};
    LawReport round_trip{.law = "lift_round_trip"};
    LawReport isometry{.law = "map_is_isometric"};
    LawReport cylinders{.law = "lift_matches_h1_h2"};

    for (size_t t = 0; t < trials; t++) {
        Rng rng(derive_seed(seed, "tensor-isomorphism", t));
        Subspace a = random_any_dim(n, rng);
        Subspace b = random_any_dim(n, rng);
        nlohmann::json pair = {{"a", a}, {"b", b}};
        Subspace la = phi.lift(a, tol);
        Subspace lb = phi.lift(b, tol);
        Subspace ab = join(a, b, tol);
        Subspace lab = phi.lift(ab, tol);
        record_equal(joins, lab, join(la, lb, tol), tol, pair);
        record_equal(meets, phi.lift(meet(a, b, tol), tol), meet(la, lb, tol), tol, pair);
        record_equal(orthos, phi.lift(ortho(a, tol), tol), ortho(la, tol), tol, pair);
        record_equal(order, meet(la, lab, tol), la, tol, pair);

        Subspace r = random_subspace(n, 1, rng);
        Subspace s = random_subspace(n, 1, rng);
        bool atom_ok = is_atom(phi.lift(r, tol)) && is_atom(phi.lift_inverse(s, tol));
        record_value(atoms, atom_ok ? 0.0 : 1.0, atom_ok, {{"r", r}, {"s", s}});

        record_equal(round_trip, phi.lift_inverse(la, tol), a, tol, {{"a", a}});
        record_equal(round_trip, phi.lift(phi.lift_inverse(b, tol), tol), b, tol, {{"b", b}});

        Vector v = rng.gaussian_vector(n);
        Vector w = rng.gaussian_vector(n);
        Complex expected = phi.conjugates() ? std::conj(inner(v, w)) : inner(v, w);
        double gap = std::abs(inner(phi.apply(v), phi.apply(w)) - expected);
        record_value(isometry, gap, gap < tol.eps_eq * v.norm() * w.norm(),
                     {{"v", vector_to_json(v)}, {"w", vector_to_json(w)}});

        Subspace p = random_any_dim(d1, rng);
        Subspace q = random_any_dim(d2, rng);
        record_equal(cylinders, phi.lift(phi.first_cylinder(p), tol), g1(p), tol, {{"p", p}});
        record_equal(cylinders, phi.lift(phi.second_cylinder(q), tol), g2(q), tol, {{"q", q}});
    }
    report.checks = {joins, meets, orthos, order, atoms, round_trip, isometry, cylinders};
    return report;
}

}  // namespace orthologic
