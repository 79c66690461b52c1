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

#ifndef ORTHOLOGIC_CLASSICAL_H
#define ORTHOLOGIC_CLASSICAL_H

#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "orthologic/lattice_laws.h"

namespace orthologic {

/// Finite sample of a phase space: an ordered list of distinct point labels.
class PhaseSpace {
   public:
    explicit PhaseSpace(std::vector<std::string> labels);
    /// Labels points by their coordinates, e.g. "(0.5,-1)".
    static PhaseSpace from_coordinates(const std::vector<std::vector<double>> &points);
    /// Points "0", "1", ..., "n-1".
    static PhaseSpace numbered(size_t n);

    size_t size() const {
        return labels_.size();
    }
    const std::vector<std::string> &labels() const {
        return labels_;
    }
    bool operator==(const PhaseSpace &other) const {
        return labels_ == other.labels_;
    }

   private:
    std::vector<std::string> labels_;
};

using PhaseSpaceRef = std::shared_ptr<const PhaseSpace>;

PhaseSpaceRef make_space(PhaseSpace s);

/// Element of the power set of a phase space.
class ClassicalProp {
   public:
    ClassicalProp() = default;
    ClassicalProp(PhaseSpaceRef space, std::vector<bool> members);
    static ClassicalProp empty(PhaseSpaceRef space);
    static ClassicalProp full(PhaseSpaceRef space);
    static ClassicalProp singleton(PhaseSpaceRef space, size_t point);
    /// Bit i of mask selects point i. Needs |space| <= 64.
    static ClassicalProp from_mask(PhaseSpaceRef space, uint64_t mask);

    const PhaseSpaceRef &space() const {
        return space_;
    }
    const std::vector<bool> &members() const {
        return members_;
    }
    bool contains(size_t point) const {
        return members_.at(point);
    }
    size_t count() const;
    uint64_t mask() const;

    bool operator==(const ClassicalProp &other) const;

   private:
    PhaseSpaceRef space_;
    std::vector<bool> members_;
};

ClassicalProp prop_and(const ClassicalProp &a, const ClassicalProp &b);
ClassicalProp prop_or(const ClassicalProp &a, const ClassicalProp &b);
ClassicalProp prop_not(const ClassicalProp &a);
/// not a, or b.
ClassicalProp prop_implies(const ClassicalProp &a, const ClassicalProp &b);

// Lattice vocabulary so the generic law checkers apply. The tolerance is unused.
ClassicalProp meet(const ClassicalProp &a, const ClassicalProp &b, const Tolerance &tol = Tolerance{});
ClassicalProp join(const ClassicalProp &a, const ClassicalProp &b, const Tolerance &tol = Tolerance{});
ClassicalProp ortho(const ClassicalProp &a, const Tolerance &tol = Tolerance{});
bool leq(const ClassicalProp &a, const ClassicalProp &b, const Tolerance &tol = Tolerance{});
bool equal(const ClassicalProp &a, const ClassicalProp &b, const Tolerance &tol = Tolerance{});
/// Size of the symmetric difference.
double lattice_distance(const ClassicalProp &a, const ClassicalProp &b);

std::vector<ClassicalProp> classical_atoms(const PhaseSpaceRef &space);
/// All 2^|space| propositions in mask order. Needs |space| <= 20.
std::vector<ClassicalProp> all_propositions(const PhaseSpaceRef &space);

/// Points are ordered pairs, lexicographic in (index1, index2); point (i, j)
/// sits at index i * |s2| + j.
PhaseSpaceRef product_phase_space(const PhaseSpaceRef &s1, const PhaseSpaceRef &s2);

/// Map between power sets.
struct ClassicalMorphism {
    PhaseSpaceRef source;
    PhaseSpaceRef target;
    std::function<ClassicalProp(const ClassicalProp &)> map;

    ClassicalProp operator()(const ClassicalProp &a) const;
};

/// Cylinder extension into the product: side 1 sends A to A x s2, side 2
/// sends B to s1 x B.
ClassicalMorphism canonical_h_classical(int side, const PhaseSpaceRef &s1, const PhaseSpaceRef &s2);

/// Point map zeta from s1 x s2 into the composite space, its preimage map eta
/// on propositions, and the outcome of the exhaustive checks.
struct ClassicalCompositeResult {
    PhaseSpaceRef s1;
    PhaseSpaceRef s2;
    PhaseSpaceRef composite;
    PhaseSpaceRef product;
    /// zeta[i * |s2| + j] is the single point of h1({i}) ^ h2({j}).
    std::vector<size_t> zeta;
    bool bijective = false;
    bool exhaustive = false;
    LawReport preserves_union;
    LawReport preserves_intersection;
    LawReport preserves_complement;

    /// {(x1, x2) : zeta(x1, x2) in a}, a proposition on s1 x s2.
    ClassicalProp eta(const ClassicalProp &a) const;
    /// Inverse of eta: image of a product proposition under zeta.
    ClassicalProp eta_inverse(const ClassicalProp &b) const;
    bool passed() const;
};

/// Checks the composite conditions for h1, h2 (exhaustively when the spaces
/// are small), builds zeta and eta and verifies that eta is a Boolean
/// isomorphism onto the power set of s1 x s2. Operation preservation is
/// checked exhaustively when the composite space has at most 12 points.
/// Throws AxiomViolation listing every broken condition:
///   1  h_i maps between the right spaces
///   2  h_i unitary and join preserving, complements h(a') = h(a)' ^ h(1)
///   3  h1(a) compatible with h2(b)
///   4  h1({x1}) ^ h2({x2}) is an atom
ClassicalCompositeResult classical_composite_isomorphism(const PhaseSpaceRef &s1, const PhaseSpaceRef &s2, const ClassicalMorphism &h1,
                                      const ClassicalMorphism &h2);

/// Samples of the oscillator trajectory x(t) = A sin(w t + phi),
/// p(t) = w m A cos(w t + phi). SI units.
struct PhaseCurveSample {
    std::vector<double> times;
    std::vector<double> x;
    std::vector<double> p;
    double omega0 = 0;
    double mass = 0;

    /// p^2 / 2m + D x^2 / 2 with D = m w^2, per sample.
    std::vector<double> energies() const;
    /// Header "t,x,p".
    void write_csv(std::ostream &out) const;
};

PhaseCurveSample sample_oscillator_curve(double amplitude, double phi, double omega0, double mass,
                                         const std::vector<double> &times);

void to_json(nlohmann::json &j, const PhaseSpace &s);
PhaseSpaceRef phase_space_from_json(const nlohmann::json &j);
/// {"space": {...}, "members": [indices]}
void to_json(nlohmann::json &j, const ClassicalProp &a);
void from_json(const nlohmann::json &j, ClassicalProp &a);

}  // namespace orthologic

#endif
