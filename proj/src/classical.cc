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

#include "orthologic/classical.h"

#include <cmath>
#include <set>
#include <sstream>

namespace orthologic {

namespace {

void require_same_space(const ClassicalProp &a, const ClassicalProp &b) {
    if (a.space() != b.space() && (a.space() == nullptr || b.space() == nullptr || !(*a.space() == *b.space()))) {
        throw SpaceMismatch("propositions live on different phase spaces");
    }
}

std::string format_number(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

}  // namespace

PhaseSpace::PhaseSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw InvalidParameter("phase space needs at least one point");
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) {
        throw InvalidParameter("phase space labels must be unique");
    }
}

PhaseSpace PhaseSpace::from_coordinates(const std::vector<std::vector<double>> &points) {
    std::vector<std::string> labels;
    for (const auto &pt : points) {
        std::string s = "(";
        for (size_t k = 0; k < pt.size(); k++) {
            if (k) {
                s += ",";
            }
            s += format_number(pt[k]);
        }
        labels.push_back(s + ")");
    }
    return PhaseSpace(std::move(labels));
}

PhaseSpace PhaseSpace::numbered(size_t n) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; i++) {
        labels.push_back(std::to_string(i));
    }
    return PhaseSpace(std::move(labels));
}

PhaseSpaceRef make_space(PhaseSpace s) {
    return std::make_shared<const PhaseSpace>(std::move(s));
}

ClassicalProp::ClassicalProp(PhaseSpaceRef space, std::vector<bool> members)
    : space_(std::move(space)), members_(std::move(members)) {
    if (space_ == nullptr) {
        throw InvalidParameter("proposition needs a phase space");
    }
    if (members_.size() != space_->size()) {
        throw DimensionMismatch("membership bitset length differs from the phase space size");
    }
}

ClassicalProp ClassicalProp::empty(PhaseSpaceRef space) {
    size_t n = space->size();
    return ClassicalProp(std::move(space), std::vector<bool>(n, false));
}

ClassicalProp ClassicalProp::full(PhaseSpaceRef space) {
    size_t n = space->size();
    return ClassicalProp(std::move(space), std::vector<bool>(n, true));
}

ClassicalProp ClassicalProp::singleton(PhaseSpaceRef space, size_t point) {
    if (point >= space->size()) {
        throw InvalidIndex("point index out of range");
    }
    ClassicalProp a = empty(std::move(space));
    a.members_[point] = true;
    return a;
}

ClassicalProp ClassicalProp::from_mask(PhaseSpaceRef space, uint64_t mask) {
    size_t n = space->size();
    if (n > 64) {
        throw InvalidParameter("from_mask needs at most 64 points");
    }
    std::vector<bool> m(n);
    for (size_t i = 0; i < n; i++) {
        m[i] = (mask >> i) & 1;
    }
    return ClassicalProp(std::move(space), std::move(m));
}

size_t ClassicalProp::count() const {
    size_t c = 0;
    for (bool b : members_) {
        c += b;
    }
    return c;
}

uint64_t ClassicalProp::mask() const {
    if (members_.size() > 64) {
        throw InvalidParameter("mask needs at most 64 points");
    }
    uint64_t m = 0;
    for (size_t i = 0; i < members_.size(); i++) {
        if (members_[i]) {
            m |= uint64_t{1} << i;
        }
    }
    return m;
}

bool ClassicalProp::operator==(const ClassicalProp &other) const {
    require_same_space(*this, other);
    return members_ == other.members_;
}

ClassicalProp prop_and(const ClassicalProp &a, const ClassicalProp &b) {
    require_same_space(a, b);
    std::vector<bool> m(a.members().size());
    for (size_t i = 0; i < m.size(); i++) {
        m[i] = a.members()[i] && b.members()[i];
    }
    return ClassicalProp(a.space(), std::move(m));
}

ClassicalProp prop_or(const ClassicalProp &a, const ClassicalProp &b) {
    require_same_space(a, b);
    std::vector<bool> m(a.members().size());
    for (size_t i = 0; i < m.size(); i++) {
        m[i] = a.members()[i] || b.members()[i];
    }
    return ClassicalProp(a.space(), std::move(m));
}

ClassicalProp prop_not(const ClassicalProp &a) {
    std::vector<bool> m(a.members());
    m.flip();
    return ClassicalProp(a.space(), std::move(m));
}

ClassicalProp prop_implies(const ClassicalProp &a, const ClassicalProp &b) {
    return prop_or(prop_not(a), b);
}

ClassicalProp meet(const ClassicalProp &a, const ClassicalProp &b, const Tolerance &) {
    return prop_and(a, b);
}

ClassicalProp join(const ClassicalProp &a, const ClassicalProp &b, const Tolerance &) {
    return prop_or(a, b);
}

ClassicalProp ortho(const ClassicalProp &a, const Tolerance &) {
    return prop_not(a);
}

bool leq(const ClassicalProp &a, const ClassicalProp &b, const Tolerance &) {
    require_same_space(a, b);
    for (size_t i = 0; i < a.members().size(); i++) {
        if (a.members()[i] && !b.members()[i]) {
            return false;
        }
    }
    return true;
}

bool equal(const ClassicalProp &a, const ClassicalProp &b, const Tolerance &) {
    return a == b;
}

double lattice_distance(const ClassicalProp &a, const ClassicalProp &b) {
    require_same_space(a, b);
    size_t d = 0;
    for (size_t i = 0; i < a.members().size(); i++) {
        d += a.members()[i] != b.members()[i];
    }
    return static_cast<double>(d);
}

std::vector<ClassicalProp> classical_atoms(const PhaseSpaceRef &space) {
    std::vector<ClassicalProp> out;
    for (size_t i = 0; i < space->size(); i++) {
        out.push_back(ClassicalProp::singleton(space, i));
    }
    return out;
}

std::vector<ClassicalProp> all_propositions(const PhaseSpaceRef &space) {
    if (space->size() > 20) {
        throw InvalidParameter("all_propositions needs at most 20 points");
    }
    std::vector<ClassicalProp> out;
    uint64_t total = uint64_t{1} << space->size();
    out.reserve(total);
    for (uint64_t m = 0; m < total; m++) {
        out.push_back(ClassicalProp::from_mask(space, m));
    }
    return out;
}

PhaseSpaceRef product_phase_space(const PhaseSpaceRef &s1, const PhaseSpaceRef &s2) {
    std::vector<std::string> labels;
    labels.reserve(s1->size() * s2->size());
    for (const auto &a : s1->labels()) {
        for (const auto &b : s2->labels()) {
            labels.push_back("(" + a + "," + b + ")");
        }
    }
    return make_space(PhaseSpace(std::move(labels)));
}

ClassicalProp ClassicalMorphism::operator()(const ClassicalProp &a) const {
    require_same_space(a, ClassicalProp::empty(source));
    ClassicalProp out = map(a);
    require_same_space(out, ClassicalProp::empty(target));
    return out;
}

ClassicalMorphism canonical_h_classical(int side, const PhaseSpaceRef &s1, const PhaseSpaceRef &s2) {
    if (side != 1 && side != 2) {
        throw InvalidParameter("side must be 1 or 2");
    }
    PhaseSpaceRef product = product_phase_space(s1, s2);
    size_t n1 = s1->size();
    size_t n2 = s2->size();
    ClassicalMorphism h{side == 1 ? s1 : s2, product, nullptr};
    h.map = [side, n1, n2, product](const ClassicalProp &a) {
        std::vector<bool> m(n1 * n2);
        for (size_t i = 0; i < n1; i++) {
            for (size_t j = 0; j < n2; j++) {
                m[i * n2 + j] = side == 1 ? a.members()[i] : a.members()[j];
            }
        }
        return ClassicalProp(product, std::move(m));
    };
    return h;
}

ClassicalProp ClassicalCompositeResult::eta(const ClassicalProp &a) const {
    require_same_space(a, ClassicalProp::empty(composite));
    std::vector<bool> m(zeta.size());
    for (size_t k = 0; k < zeta.size(); k++) {
        m[k] = a.members()[zeta[k]];
    }
    return ClassicalProp(product, std::move(m));
}

ClassicalProp ClassicalCompositeResult::eta_inverse(const ClassicalProp &b) const {
    require_same_space(b, ClassicalProp::empty(product));
    std::vector<bool> m(composite->size(), false);
    for (size_t k = 0; k < zeta.size(); k++) {
        if (b.members()[k]) {
            m[zeta[k]] = true;
        }
    }
    return ClassicalProp(composite, std::move(m));
}

bool ClassicalCompositeResult::passed() const {
    return bijective && preserves_union.holds() && preserves_intersection.holds() && preserves_complement.holds();
}

namespace {

constexpr size_t kExhaustiveSourcePoints = 10;
constexpr size_t kExhaustiveCompositePoints = 12;

// Join preservation is checked in its strongest finite form: h(A) is the
// union of the images of the points of A, which covers arbitrary families.
void check_c_morphism(const ClassicalMorphism &h, int side, std::vector<std::string> &problems) {
    const auto &src = h.source;
    ClassicalProp top = ClassicalProp::full(h.target);
    ClassicalProp bottom = ClassicalProp::empty(h.target);
    std::string tag = "h" + std::to_string(side);
    if (!(h(ClassicalProp::empty(src)) == bottom)) {
        problems.push_back(tag + " does not send the empty set to the empty set");
    }
    ClassicalProp one = h(ClassicalProp::full(src));
    if (!(one == top)) {
        problems.push_back(tag + " is not unitary");
    }
    std::vector<ClassicalProp> atom_images;
    for (const auto &a : classical_atoms(src)) {
        atom_images.push_back(h(a));
    }
    std::vector<ClassicalProp> props;
    if (src->size() <= kExhaustiveSourcePoints) {
        props = all_propositions(src);
    } else {
        props = classical_atoms(src);
    }
    for (const auto &a : props) {
        ClassicalProp expected = bottom;
        for (size_t i = 0; i < src->size(); i++) {
            if (a.contains(i)) {
                expected = prop_or(expected, atom_images[i]);
            }
        }
        ClassicalProp img = h(a);
        if (!(img == expected)) {
            problems.push_back(tag + " does not preserve joins");
            return;
        }
        if (!(h(prop_not(a)) == prop_and(prop_not(img), one))) {
            problems.push_back(tag + " does not map complements to relative complements");
            return;
        }
    }
}

}  // namespace

ClassicalCompositeResult classical_composite_isomorphism(const PhaseSpaceRef &s1, const PhaseSpaceRef &s2, const ClassicalMorphism &h1,
                                      const ClassicalMorphism &h2) {
    if (h1.source == nullptr || h2.source == nullptr || h1.target == nullptr || h2.target == nullptr ||
        !(*h1.source == *s1) || !(*h2.source == *s2) || !(*h1.target == *h2.target)) {
        throw AxiomViolation({1}, "condition 1: h1 and h2 must map the two phase spaces into one common space");
    }
    ClassicalCompositeResult r;
    r.s1 = s1;
    r.s2 = s2;
    r.composite = h1.target;
    r.product = product_phase_space(s1, s2);

    std::vector<int> broken;
    std::vector<std::string> problems;
    check_c_morphism(h1, 1, problems);
    check_c_morphism(h2, 2, problems);
    if (!problems.empty()) {
        broken.push_back(2);
    }

    auto atoms1 = classical_atoms(s1);
    auto atoms2 = classical_atoms(s2);
    bool incompatible = false;
    std::vector<std::string> atom_problems;
    for (size_t i = 0; i < atoms1.size(); i++) {
        ClassicalProp a = h1(atoms1[i]);
        for (size_t j = 0; j < atoms2.size(); j++) {
            ClassicalProp b = h2(atoms2[j]);
            if (!compatible(a, b)) {
                incompatible = true;
            }
            ClassicalProp m = prop_and(a, b);
            if (m.count() != 1) {
                atom_problems.push_back("h1({" + s1->labels()[i] + "}) ^ h2({" + s2->labels()[j] + "}) has " +
                                        std::to_string(m.count()) + " points");
                continue;
            }
            for (size_t k = 0; k < m.members().size(); k++) {
                if (m.contains(k)) {
                    r.zeta.push_back(k);
                }
            }
        }
    }
    if (incompatible) {
        broken.push_back(3);
        problems.push_back("images of h1 and h2 are not compatible");
    }
    if (!atom_problems.empty()) {
        broken.push_back(4);
        problems.push_back(atom_problems.front());
    }
    if (!broken.empty()) {
        std::string msg;
        for (size_t k = 0; k < broken.size(); k++) {
            msg += (k ? "; " : "") + std::string("condition ") + std::to_string(broken[k]);
        }
        msg += ":";
        for (const auto &p : problems) {
            msg += " " + p + ".";
        }
        throw AxiomViolation(broken, msg);
    }

    std::set<size_t> hit(r.zeta.begin(), r.zeta.end());
    r.bijective = hit.size() == r.zeta.size() && hit.size() == r.composite->size();

    r.preserves_union.law = "eta_preserves_union";
    r.preserves_intersection.law = "eta_preserves_intersection";
    r.preserves_complement.law = "eta_preserves_complement";
    size_t n = r.composite->size();
    r.exhaustive = n <= kExhaustiveCompositePoints && r.zeta.size() <= kExhaustiveCompositePoints;
    if (!r.exhaustive) {
        // eta is a preimage map, so it preserves the operations by
        // construction; only the point map needs checking at this size.
        r.preserves_union.note = r.preserves_intersection.note = r.preserves_complement.note =
            "composite space too large for exhaustive enumeration";
        return r;
    }
    std::vector<uint64_t> eta_mask(uint64_t{1} << n);
    std::set<uint64_t> distinct;
    for (uint64_t a = 0; a < eta_mask.size(); a++) {
        eta_mask[a] = r.eta(ClassicalProp::from_mask(r.composite, a)).mask();
        distinct.insert(eta_mask[a]);
    }
    uint64_t product_full = (uint64_t{1} << r.zeta.size()) - 1;
    if (distinct.size() != eta_mask.size() || distinct.size() != product_full + 1) {
        r.bijective = false;
    }
    for (uint64_t a = 0; a < eta_mask.size(); a++) {
        r.preserves_complement.trials++;
        if (eta_mask[~a & (eta_mask.size() - 1)] != (~eta_mask[a] & product_full) &&
            !r.preserves_complement.fails()) {
            r.preserves_complement.status = LawStatus::fails;
            r.preserves_complement.counterexample = {{"a", ClassicalProp::from_mask(r.composite, a)}};
        }
        for (uint64_t b = 0; b < eta_mask.size(); b++) {
            r.preserves_union.trials++;
            r.preserves_intersection.trials++;
            if (eta_mask[a | b] != (eta_mask[a] | eta_mask[b]) && !r.preserves_union.fails()) {
                r.preserves_union.status = LawStatus::fails;
                r.preserves_union.counterexample = {{"a", ClassicalProp::from_mask(r.composite, a)},
                                                    {"b", ClassicalProp::from_mask(r.composite, b)}};
            }
            if (eta_mask[a & b] != (eta_mask[a] & eta_mask[b]) && !r.preserves_intersection.fails()) {
                r.preserves_intersection.status = LawStatus::fails;
                r.preserves_intersection.counterexample = {{"a", ClassicalProp::from_mask(r.composite, a)},
                                                           {"b", ClassicalProp::from_mask(r.composite, b)}};
            }
        }
    }
    return r;
}

std::vector<double> PhaseCurveSample::energies() const {
    std::vector<double> e;
    double d = mass * omega0 * omega0;
    for (size_t k = 0; k < x.size(); k++) {
        e.push_back(p[k] * p[k] / (2 * mass) + 0.5 * d * x[k] * x[k]);
    }
    return e;
}

void PhaseCurveSample::write_csv(std::ostream &out) const {
    auto old = out.precision(17);
    out << "t,x,p\n";
    for (size_t k = 0; k < times.size(); k++) {
        out << times[k] << "," << x[k] << "," << p[k] << "\n";
    }
    out.precision(old);
}

PhaseCurveSample sample_oscillator_curve(double amplitude, double phi, double omega0, double mass,
                                         const std::vector<double> &times) {
    if (!(omega0 > 0) || !(mass > 0) || !std::isfinite(omega0) || !std::isfinite(mass) ||
        !std::isfinite(amplitude) || !std::isfinite(phi)) {
        throw InvalidParameter("oscillator needs omega0 > 0, m > 0 and finite parameters");
    }
    PhaseCurveSample s;
    s.omega0 = omega0;
    s.mass = mass;
    s.times = times;
    for (double t : times) {
        double arg = omega0 * t + phi;
        s.x.push_back(amplitude * std::sin(arg));
        s.p.push_back(omega0 * mass * amplitude * std::cos(arg));
    }
    return s;
}

void to_json(nlohmann::json &j, const PhaseSpace &s) {
    j = nlohmann::json{{"points", s.labels()}};
}

PhaseSpaceRef phase_space_from_json(const nlohmann::json &j) {
    return make_space(PhaseSpace(j.at("points").get<std::vector<std::string>>()));
}

void to_json(nlohmann::json &j, const ClassicalProp &a) {
    std::vector<size_t> members;
    for (size_t i = 0; i < a.members().size(); i++) {
        if (a.members()[i]) {
            members.push_back(i);
        }
    }
    j = nlohmann::json{{"space", *a.space()}, {"members", members}};
}

void from_json(const nlohmann::json &j, ClassicalProp &a) {
    PhaseSpaceRef space = phase_space_from_json(j.at("space"));
    std::vector<bool> m(space->size(), false);
    for (size_t i : j.at("members").get<std::vector<size_t>>()) {
        if (i >= m.size()) {
            throw InvalidIndex("member index out of range");
        }
        m[i] = true;
    }
    a = ClassicalProp(space, std::move(m));
}

}  // namespace orthologic
