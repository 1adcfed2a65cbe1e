#pragma once

/* Mod-2 Seiberg-Witten invariants of spin structures on closed oriented smooth
 * 4-manifolds, and their Pin(2)-equivariant refinements, computed from finite
 * topological input data: (b1, b_+, sigma), the integral quadruple-cup form
 * c_I on H^1(X;Z), the mod-2 index tables q^2 / q^3 of the spin structure over
 * 2- and 3-dimensional cup loci, and optionally the full mod-2 quadruple form
 * on a generating set of H^1(X;Z_2) whose first b1 entries reduce the integral
 * basis (used for twisting by degree-1 classes).
 *
 * Values live in H^*(Pic) = Lambda[x_1..x_{b1}] for the plain invariant and in
 * H^*(Pic)[u]/(u^{b_+}) for the Pin(2) refinement. */

#include <array>
#include <climits>
#include <set>
#include <string>
#include <vector>

#include "classcalc.hpp"
#include "f2ring.hpp"

namespace spinsw {

struct ManifoldData {
    std::string name;
    int b1 = 0;
    int b_plus = 1;
    int sigma = 0;
    QuadForm quad;                       // n = b1, integral entries
    std::set<std::array<int, 2>> q2;     // pairs i<j with q^2 = 1
    std::set<std::array<int, 3>> q3;     // triples i<j<k with q^3 = 1
    int z2_rank = 0;                     // >= b1
    QuadForm z2_quad;                    // n = z2_rank, entries in {0,1}
};

/* All realizability diagnostics, empty == valid.  Arithmetic impossibilities
 * (signature not divisible by 16, b_+ < 1) and geometric constraints (b_+ <= 2
 * forces sigma = 0 and even c_I; b_+ = 3 forces sigma in {0,-16}, and even c_I
 * when sigma = -16) are both hard failures: calculators refuse to proceed. */
std::vector<std::string> validate(const ManifoldData& md);

/* Throws ValidationFailed when validate(md) is non-empty. */
void require_valid(const ManifoldData& md);

/* The common value ring Lambda[x_1..x_{b1}] (x) F_2[u]/(u^{b_+}). */
F2Ring value_ring(const ManifoldData& md);

/* Classes built from the index tables: sum q2[i][j] x_i x_j and
 * sum q3[i][j][k] x_i x_j x_k. */
F2Element q2_class(const ManifoldData& md, const F2Ring& ring);
F2Element q3_class(const ManifoldData& md, const F2Ring& ring);

/* Alternating multilinear evaluation of the tables on integer vectors. */
int q2_eval(const ManifoldData& md, const std::vector<long long>& a,
            const std::vector<long long>& b);
int q3_eval(const ManifoldData& md, const std::vector<long long>& a,
            const std::vector<long long>& b, const std::vector<long long>& c);

/* s_{2k,Z_2}(D) with the u-parts resolved as far as the theory allows:
 * k <= 0 trivially, k = 1 from the q^3/q^2 tables, k > 1 only when degree
 * reasons force them to vanish (always when b1 = 0). */
EquivariantSegre equivariant_segre(const ManifoldData& md, int k, const F2Ring& ring);

/* SW_{X,s}(x^m) in Lambda[x_1..x_{b1}].  Zero for all m > 0; for m = 0 the
 * value is the q^2-class (b_+ = 1), the q^3-class (b_+ = 2), the Segre class
 * s_{2(1+sigma/16)}(D) (b_+ = 3), and 0 (b_+ > 3). */
F2Element sw_basic(const ManifoldData& md, int m);

/* A Pin(2)-equivariant value together with its precision: coefficients of u^c
 * for c >= known_below are not determined by the input data (INT_MAX = exact). */
struct Pin2Class {
    F2Element value;
    int known_below = INT_MAX;
    bool exact(int u_trunc) const
    {
        return known_below == INT_MAX || (u_trunc > 0 && known_below >= u_trunc);
    }
};

/* SW^{Pin(2)}_{X,s}(u^a q^j) in H^*(Pic)[u]/(u^{b_+}), a in {0,1,2}.
 * UnsupportedPrecision when b_+ <= 2, j > 0 and the value is not forced to
 * vanish by degree (the theory does not determine it). */
Pin2Class sw_pin2(const ManifoldData& md, int a, int j);

/* Twist of the spin structure by a degree-1 mod-2 class A (a 0/1 vector over
 * the z2 generating set), for b_+ = 2: flips q3[i][j][k] by the quadruple
 * product of A with the reductions of e_i, e_j, e_k.  Involutive. */
ManifoldData twist_b2(const ManifoldData& md, const std::vector<int>& A);

/* For b_+ = 1 a single twist is not determined; the four-term second
 * difference <[X], A.B.a.b> is.  A, B are 0/1 vectors over the z2 generators,
 * av/bv integer vectors over the first b1 (integral) generators. */
int twist_defect_b1(const ManifoldData& md, const std::vector<int>& A, const std::vector<int>& B,
                    const std::vector<long long>& av, const std::vector<long long>& bv);

/* Whether SW_{X,s'}(1) is nonzero for the given spin structure or some twist
 * of it, together with a human-readable witness. */
struct NonvanishingVerdict {
    bool nonzero = false;
    std::string witness;
};
NonvanishingVerdict any_nonzero_sw(const ManifoldData& md);

/* Adjunction bound: an embedded surface of genus g representing a class of
 * even self-intersection a^2 satisfies 2g - 2 >= |a^2| whenever some SW
 * invariant is nonzero; returns the least admissible g.  HypothesisNotMet when
 * every invariant (of every twist) vanishes or a_squared is odd. */
long long genus_bound(const ManifoldData& md, long long a_squared);

/* For a closed oriented spin TOPOLOGICAL manifold with b_+ = 3, sigma = -16:
 * any odd quadruple cup product c_I obstructs the existence of a smooth
 * structure.  Deliberately bypasses validate (that is the point). */
bool smoothability_obstruction(int b1, int b_plus, int sigma, const QuadForm& quad);

/* Degree-forced default ranges for reports: beyond them everything vanishes. */
int default_m_max(const ManifoldData& md);
int default_j_max(const ManifoldData& md);

/* Declared degrees of the values. */
int sw_degree(const ManifoldData& md, int m);
int pin2_degree(const ManifoldData& md, int a, int j);

}  // namespace spinsw
