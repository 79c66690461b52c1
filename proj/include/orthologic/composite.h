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

#ifndef ORTHOLOGIC_COMPOSITE_H
#define ORTHOLOGIC_COMPOSITE_H

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "orthologic/lattice_laws.h"
#include "orthologic/tensor.h"

namespace orthologic {

enum class Linearity { linear, antilinear, gemischt, unknown };
std::string to_string(Linearity l);

/// Raised when a morphism acts neither linearly nor antilinearly on rays,
/// which no morphism of a valid composite system can do.
struct MixedLinearity : public UnknownLinearity {
    using UnknownLinearity::UnknownLinearity;
};

/// Map from the subspaces of C^source_dim to the subspaces of C^target_dim.
struct SubspaceMorphism {
    size_t source_dim = 0;
    size_t target_dim = 0;
    std::function<Subspace(const Subspace &)> map;
    Linearity linearity = Linearity::unknown;
    std::string name;
    /// Set when a factor has dimension below 3, where the tensor
    /// identification is not guaranteed.
    std::string warning;

    Subspace operator()(const Subspace &p) const;
    Subspace of_ray(const Vector &x, const Tolerance &tol = Tolerance{}) const;
};

/// Cylinder morphism into C^(d1 d2). Side 1 sends p to W (conj?(p) (x) C^d2),
/// side 2 sends q to W (C^d1 (x) conj?(q)). Linear without conjugation,
/// antilinear with it. The twist W must be unitary.
SubspaceMorphism canonical_h(int side, size_t d1, size_t d2, const std::optional<Matrix> &twist = std::nullopt,
                             bool conjugate = false);

enum class Axiom { I_c_morphism, II_compatibility, III_atoms };
std::string to_string(Axiom a);

/// Outcome of one composite-system condition. A failing report's
/// counterexample holds everything recheck_axiom needs to reproduce it.
struct AxiomReport {
    Axiom axiom = Axiom::I_c_morphism;
    bool passed = true;
    size_t samples = 0;
    double worst_residual = 0;
    nlohmann::json counterexample;
};
void to_json(nlohmann::json &j, const AxiomReport &r);

/// I:   each h_i is a unitary c-morphism: joins of random families,
///      compatible pairs, h(1) = 1, h(0) = 0, h(p') = h(p)' ^ h(1).
/// II:  h1(p1) is compatible with h2(p2) for random p1, p2.
/// III: h1(<x1>) ^ h2(<x2>) is an atom for random rays.
std::vector<AxiomReport> verify_axioms(const SubspaceMorphism &h1, const SubspaceMorphism &h2, size_t trials,
                                       uint64_t seed, const Tolerance &tol = Tolerance{});
/// True when the stored counterexample still breaks the axiom.
bool recheck_axiom(const AxiomReport &report, const SubspaceMorphism &h1, const SubspaceMorphism &h2,
                   const Tolerance &tol = Tolerance{});

/// Linear bijection F_{y,x} from h(<x>) onto h(<y>). A vector t of h(<x>)
/// splits uniquely as t = s + r with s in h(<y>) and r in h(<x - y>);
/// F(t) = s. For y parallel to x the map is routed through an auxiliary
/// independent vector w as F_{y,w} F_{w,x}.
class Intertwiner {
   public:
    Intertwiner(Subspace domain, Subspace codomain, Matrix matrix);

    const Subspace &domain() const {
        return domain_;
    }
    const Subspace &codomain() const {
        return codomain_;
    }
    /// Acts as F on the domain and as zero on its complement.
    const Matrix &matrix() const {
        return matrix_;
    }
    /// Throws NotInDomain when t is not in the domain.
    Vector operator()(const Vector &t, const Tolerance &tol = Tolerance{}) const;
    /// F on the domain, identity on its orthogonal complement.
    Matrix extended() const;
    /// Matrix of F restricted to domain -> codomain in the two stored bases.
    Matrix restricted() const;

   private:
    Subspace domain_;
    Subspace codomain_;
    Matrix matrix_;
};

/// Throws ZeroState for x = 0 or y = 0, PreconditionViolated when h(<x>) is
/// not inside the direct sum h(<y>) + h(<x - y>).
Intertwiner intertwiner(const SubspaceMorphism &h, const Vector &y, const Vector &x,
                        const Tolerance &tol = Tolerance{});

/// The scalar action F_{l x, x} = l P1 + conj(l) P2 splits h(<x>) into a
/// linear part P1 and an antilinear part P2 (both as ambient matrices).
struct ScalarAction {
    Matrix p1;
    Matrix p2;
};
ScalarAction scalar_action(const SubspaceMorphism &h, const Vector &x, const Tolerance &tol = Tolerance{});

/// Decides whether F_{l x, x} acts as l or conj(l) on random probes, for
/// l = i and one random l per probe. gemischt when neither fits.
Linearity classify_linearity(const SubspaceMorphism &h, size_t probes, uint64_t seed,
                             const Tolerance &tol = Tolerance{});

/// F_{y1,x1} K_{y2,x2} = K_{y2,x2} F_{y1,x1} on h1(<x1>) ^ h2(<x2>), with
/// images landing in the expected meets. Throws PreconditionViolated unless
/// each pair is nonzero and linearly independent.
LawReport check_commutation(const SubspaceMorphism &h1, const SubspaceMorphism &h2, const Vector &x1, const Vector &y1,
                            const Vector &x2, const Vector &y2, const Tolerance &tol = Tolerance{});
/// Same identity with F_{l x1, x1} in place of F_{y1, x1}.
LawReport check_scalar_commutation(const SubspaceMorphism &h1, const SubspaceMorphism &h2, const Vector &x1,
                                   Complex lambda, const Vector &x2, const Vector &y2,
                                   const Tolerance &tol = Tolerance{});

/// For random independent x, y: h(<x - y>) <= h(<x>) v h(<y>) and the sum
/// h(<x>) + h(<y>) is direct.
LawReport check_m_morphism(const SubspaceMorphism &h, size_t trials, uint64_t seed, const Tolerance &tol = Tolerance{});

/// p -> h(p) ^ other(<x>): subspaces of the source onto the subspaces of
/// the slice other(<x>).
struct RestrictionMap {
    Subspace slice;
    std::function<Subspace(const Subspace &)> map;
};
RestrictionMap restriction_iso(const SubspaceMorphism &h, const SubspaceMorphism &other, const Vector &x,
                               const Tolerance &tol = Tolerance{});
/// restriction_iso(h1, h2, x2).
RestrictionMap restriction_iso_u(const SubspaceMorphism &h1, const SubspaceMorphism &h2, const Vector &x2,
                                 const Tolerance &tol = Tolerance{});
/// Atoms to atoms, dimension preserved, joins preserved, full space onto
/// the slice, on random subspaces.
LawReport verify_restriction_iso(const SubspaceMorphism &h, const SubspaceMorphism &other, const Vector &x,
                                 size_t trials, uint64_t seed, const Tolerance &tol = Tolerance{});

/// z1, z2 nonzero and z a nonzero vector of h1(<z1>) ^ h2(<z2>).
struct Anchors {
    Vector z1;
    Vector z2;
    Vector z;
};
/// First standard basis vectors, and z the unit vector spanning the meet
/// with its largest entry made real positive.
Anchors default_anchors(const SubspaceMorphism &h1, const SubspaceMorphism &h2, const Tolerance &tol = Tolerance{});

/// U_<x2>(x1) = (a / |x2|) F_{x1,z1} K_{x2,z2} z and
/// V_<x1>(x2) = (a / |x1|) K_{x2,z2} F_{x1,z1} z, a = |z1| |z2| / |z|.
class UVMaps {
   public:
    UVMaps(SubspaceMorphism h1, SubspaceMorphism h2, Anchors anchors, Tolerance tol);

    Vector U(const Vector &x2, const Vector &x1) const;
    Vector V(const Vector &x1, const Vector &x2) const;
    const Anchors &anchors() const {
        return anchors_;
    }
    double alpha() const {
        return alpha_;
    }

   private:
    SubspaceMorphism h1_;
    SubspaceMorphism h2_;
    Anchors anchors_;
    Tolerance tol_;
    double alpha_;
};

/// Throws ZeroState for zero anchors and AnchorNotInMeet when z is outside
/// h1(<z1>) ^ h2(<z2>).
UVMaps build_U_V(const SubspaceMorphism &h1, const SubspaceMorphism &h2, const Anchors &anchors,
                 const Tolerance &tol = Tolerance{});

/// U_<f_j>(e_i) at flat index i * d2 + j. Bases are given as the columns
/// of unitary matrices; throws NotOrthonormal otherwise.
std::vector<Vector> composite_onb(const UVMaps &uv, const Matrix &basis1, const Matrix &basis2,
                                  const Tolerance &tol = Tolerance{});

/// The four ways the composite space is identified with a tensor space:
///   phi  h1 linear, h2 linear          on H1 (x) H2
///   psi  h1 antilinear, h2 antilinear  on H1 (x) H2, coefficients conjugated
///   mu   h1 antilinear, h2 linear      on H1* (x) H2
///   nu   h1 linear, h2 antilinear      on H1* (x) H2, coefficients conjugated
enum class BasisMapCase { phi, psi, mu, nu };
std::string to_string(BasisMapCase c);

/// sum_ij c^ij U_<f_j>(e_i) where c^ij are the coordinates of the input in
/// the basis e_i (x) f_j (or e^i (x) f_j), conjugated for psi and nu. Inputs
/// are flattened tensors; dual-factor coordinates follow the convention of
/// riesz().
class BasisMap {
   public:
    BasisMap(BasisMapCase kind, TensorIndex index, Matrix basis1, Matrix basis2, std::vector<Vector> images);

    BasisMapCase kind() const {
        return kind_;
    }
    const TensorIndex &index() const {
        return index_;
    }
    bool dual_domain() const {
        return kind_ == BasisMapCase::mu || kind_ == BasisMapCase::nu;
    }
    bool conjugates() const {
        return kind_ == BasisMapCase::psi || kind_ == BasisMapCase::nu;
    }
    /// "H1⊗H2" or "H1*⊗H2".
    std::string target() const;

    Vector apply(const Vector &v) const;
    Vector apply_inverse(const Vector &w) const;
    Subspace lift(const Subspace &g, const Tolerance &tol = Tolerance{}) const;
    Subspace lift_inverse(const Subspace &g, const Tolerance &tol = Tolerance{}) const;
    /// p (x) H2 inside the domain; p is conjugated to k(p) for a dual domain.
    Subspace first_cylinder(const Subspace &p) const;
    /// H1 (x) q inside the domain.
    Subspace second_cylinder(const Subspace &q) const;

   private:
    BasisMapCase kind_;
    TensorIndex index_;
    Matrix basis1_;
    Matrix basis2_;
    Matrix domain_basis_;
    Matrix images_;
};

/// Needs both linearity fields set. Throws UnknownLinearity when one is
/// unknown and MixedLinearity when one is gemischt.
BasisMap build_basis_map(const SubspaceMorphism &h1, const SubspaceMorphism &h2, const UVMaps &uv,
                         const Matrix &basis1, const Matrix &basis2, const Tolerance &tol = Tolerance{});

struct TensorIsomorphismReport {
    BasisMapCase kind = BasisMapCase::phi;
    Linearity linearity1 = Linearity::unknown;
    Linearity linearity2 = Linearity::unknown;
    std::vector<AxiomReport> axioms;
    std::vector<LawReport> checks;
    std::vector<std::string> warnings;

    std::string target() const;
    bool passed() const;
    double worst_residual() const;
};
void to_json(nlohmann::json &j, const TensorIsomorphismReport &r);

/// Verifies the axioms (throwing AxiomViolation with conditions 1, 2, 3 for
/// I, II, III on failure), classifies both morphisms, builds the basis map
/// from the standard bases and checks on `trials` random inputs that the
/// lifted map preserves joins, meets, complements, order and atoms, is
/// inverted by the lifted inverse, is an isometry or anti-isometry, and
/// sends tensor cylinders to the images of h1 and h2.
TensorIsomorphismReport verify_tensor_isomorphism(const SubspaceMorphism &h1, const SubspaceMorphism &h2, size_t trials, uint64_t seed,
                                 const Tolerance &tol = Tolerance{});

}  // namespace orthologic

#endif
