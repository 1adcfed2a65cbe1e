#pragma once

/* Characteristic-class calculus for the index bundle over the Picard torus:
 * mod-2 binomials with negative upper index, Segre classes of the quadruple-cup
 * data, their Z_2-equivariant triples s + u t + u^2 r, twisting by a line
 * bundle, and the inverse-Euler-class expansion in q and the Laurent variable
 * mu used by the connected-sum product formula. */

#include <array>
#include <map>
#include <vector>

#include "f2ring.hpp"

namespace spinsw {

/* Parity of binom(n, k).  For n >= 0 this is the Lucas rule (1 iff the bits of
 * k are contained in those of n); for n < 0 it is the parity of
 * binom(|n|+k-1, k), matching the Pascal recurrence extended upward. */
bool binom_mod2(long long n, long long k);

/* Integral quadruple-cup form: c_I on strictly increasing 4-subsets I of
 * {1..n}.  Absent keys are 0.  Over F_2 only the parities matter. */
struct QuadForm {
    int n = 0;
    std::map<std::array<int, 4>, long long> c;

    std::vector<std::string> validate() const;
    bool any_odd() const;
};

/* s_2(D) = sum_{|I|=4} c_I x_I, reduced mod 2. */
F2Element segre_s2(const QuadForm& f, const F2Ring& ring);

/* Divided power s_{2j}(D) = (1/j!) s_2(D)^j: the sum over j pairwise disjoint
 * 4-subsets of the products c_{I_1}..c_{I_j} x_{I_1}..x_{I_j}.  Odd Segre
 * classes vanish, so these are all of them.  j = 0 gives 1. */
F2Element segre_s2j(const QuadForm& f, int j, const F2Ring& ring);

/* The equivariant Segre class s_{2k,Z_2}(D) = s + u t + u^2 r in
 * H^*[u]/(u^3).  The u-parts are known only in special situations (k <= 0,
 * k = 1 via the q^3/q^2 tables, or forced to vanish by degree); elsewhere they
 * are tracked as unknown and the callers work modulo the matching u-power. */
struct EquivariantSegre {
    int k = 0;
    F2Element s, t, r;     // u-free; unknown parts are stored as 0
    bool t_known = true;
    bool r_known = true;
};

/* s + u t + u^2 r at full precision; UnknownPart if an unknown piece is
 * demanded and the ring keeps the corresponding u-power alive. */
F2Element assemble(const EquivariantSegre& es);

/* Same value with unknown parts as 0, plus the u-level below which the result
 * is exact (INT_MAX when fully known). */
std::pair<F2Element, int> assemble_partial(const EquivariantSegre& es);

/* e^k for small k >= 0. */
F2Element pow(const F2Element& e, int k);

/* Segre classes of E (x) L from those of E:
 *     s_j(E (x) L) = sum_l s_l(E) c1(L)^{j-l} binom(-d-l, j-l)
 * with d the virtual rank of E.  s_list[l] = s_l(E), missing entries 0; c1 is
 * the distinguished degree-2 element playing c1(L). */
F2Element twisted_segre(const std::vector<F2Element>& s_list, int d,
                        const F2Element& c1, int j);

/* psi-image of the inverse equivariant Euler class of the index bundle:
 *
 *   sum_{k=0}^{cutoff} mu^{-d/2-k} sum_{j=0}^{k} q^{k-j} seg[j] binom(-d/2-j, k-j)
 *
 * where d is the (even) complex virtual rank and seg[j] = s_{2j,Z_2}(D) lives
 * in `ring` (Laurent in mu, truncated at u^3).  Entries past seg.size() are 0. */
F2Element euler_inverse_psi_elems(const std::vector<F2Element>& seg, int d, int cutoff,
                                  const F2Ring& ring);

/* Convenience entry point taking the equivariant triples at full precision. */
F2Element euler_inverse_psi(const std::vector<EquivariantSegre>& seg, int d, int cutoff,
                            const F2Ring& ring);

}  // namespace spinsw
