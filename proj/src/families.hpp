#pragma once

/* Families of spin 4-manifolds over a finite base: the caller presents
 * H^*(B;Z_2) as a finite basis with a multiplication table, the
 * Stiefel-Whitney classes of H^+ and the equivariant Segre classes of the
 * index bundle, and we evaluate the equivariant Euler class of H^+, the
 * realizability constraint, and the two families invariants. */

#include <map>

#include "swspin.hpp"

namespace spinsw {

struct FamilyData {
    std::string name;
    int b_plus = 1;
    int sigma = 0;
    /* b1 of the fibre.  For b1 > 0 the base algebra is expected to already
     * contain the odd part (H^*(B0) tensor the exterior algebra of the torus);
     * we never build Picard bundles ourselves. */
    int b1 = 0;
    std::shared_ptr<const BaseAlgebra> base;
    std::vector<F2Element> w;            // w[0..b_plus] of H^+, w[0] = 1
    std::map<int, EquivariantSegre> segre;  // k >= 1; k = 0 is implied
};

/* base[u], no truncation: H^*_{Z_2} of the sphere bundle is presented as the
 * quotient of this ring by the monic Euler class. */
F2Ring family_ring(const FamilyData& fd);

/* Structural diagnostics: base well-formed, w list shape and homogeneity,
 * Segre degrees, u-part conventions.  Theorem-level conditions (top-w
 * vanishing for sigma < 0, the mod-u^3 constraint) are reported by
 * constraint_check instead, so that violating presentations can be examined
 * rather than merely rejected. */
std::vector<std::string> validate_family(const FamilyData& fd);
void require_valid_family(const FamilyData& fd);

/* e_{Z_2}(H^+) = sum_{l=0}^{b_+} u^l w_{b_+-l}, monic of u-degree b_+. */
F2Element equivariant_euler_hplus(const FamilyData& fd);

/* Necessary realizability conditions:
 * (w_{b_+} + u w_{b_+-1} + u^2 w_{b_+-2}) s_{2k,Z_2}(D) = 0 mod u^3 for every
 * supplied k >= 1 + sigma/16, and the three top w's vanish when sigma < 0
 * (which is the k = 0 instance, since s_0 = 1).  Necessary, not sufficient:
 * passing does not certify that a family exists. */
std::vector<std::string> constraint_check(const FamilyData& fd);

/* SW^{Pin(2)}(q^j) in base[u]/(e_{Z_2}(H^+)): form e * s_{2k,Z_2} with
 * k = j + 1 + sigma/16, divide by u^3, reduce by the Euler class.
 * NotDivisibleByU3 when the constraint fails; MissingSegre when the needed
 * class is neither supplied nor forced to vanish by degree. */
F2Element families_sw_pin2(const FamilyData& fd, int j);

/* SW(x^m) over the base for even m: the u^0 coefficient
 * w_{b_+-1} r + w_{b_+-2} t + w_{b_+-3} s of the same expression at
 * k = m/2 + 1 + sigma/16.  NoChamber when w_{b_+} != 0. */
F2Element families_sw(const FamilyData& fd, int m);

/* Trivial family over a point of a b1 = 0 manifold; its invariants coincide
 * with the swspin ones. */
FamilyData family_from_manifold(const ManifoldData& md);

/* Largest power with a chance of landing within the base's top degree. */
int families_default_m_max(const FamilyData& fd);
int families_default_j_max(const FamilyData& fd);

}  // namespace spinsw
