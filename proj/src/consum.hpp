#pragma once

/* Connected sums: combining the topological data of two manifolds, the
 * Pin(2)-equivariant product formula evaluated through the inverse-Euler
 * expansion in the Laurent variable mu, the mK3 closed form, and the
 * consistency check of the product route against the direct computation. */

#include "swspin.hpp"

namespace spinsw {

/* Block sum of all input data of X and Y (mixed cup products vanish on a
 * connected sum).  The z2 generating set is reordered so the first
 * b1(X)+b1(Y) entries are the reductions of the combined integral basis. */
ManifoldData connect(const ManifoldData& x, const ManifoldData& y);

/* A polynomial in the two formal q-symbols of a product of groups, with
 * F2Element coefficients. */
struct QQTerm {
    int e1 = 0;
    int e2 = 0;
    F2Element coeff;
};

/* psi_i sends its own q-symbol to q and the other one to q + mu. */
F2Element psi_substitute(const std::vector<QQTerm>& poly, int which, const F2Ring& ring);

/* SW^{Pin(2)}_{X#Y}(u^a q^j) by the connected-sum product formula:
 *
 *   u^{b_+(X)} (id (x) SW_Y)(psi_2(e(D_X)^{-1} theta))
 * + u^{b_+(Y)} (id (x) SW_X)(psi_1(e(D_Y)^{-1} theta)),
 *
 * computed through the mu-expansion; strictly negative mu-coefficients of the
 * sum are asserted to vanish (NegativeMuResidue) and the mu^0 part is
 * returned, in Lambda[x_1..x_{b1(X)+b1(Y)}][u]/(u^{b_+(X)+b_+(Y)}).
 * cutoff < 0 means the default degree-forced bound. */
Pin2Class sw_product_formula(const ManifoldData& x, const ManifoldData& y, int a, int j,
                             int cutoff = -1);

/* Least expansion index K beyond which every contribution dies by degree. */
int product_cutoff(const ManifoldData& x, const ManifoldData& y, int j);

/* Data and closed form for the m-fold connected sum of K3s:
 * SW^{Pin(2)}(q^j) = u^{3m-3} when j = m-1, else 0. */
ManifoldData mk3_data(int m);
std::vector<F2Element> mk3_table(int m);  // indexed j = 0..m

struct ConsistencyRow {
    int a = 0;
    int j = 0;
    bool pass = false;
};
struct ConsistencyReport {
    int modulus = 0;  // values compared below u^modulus; INT_MAX = exact
    bool all_pass = true;
    std::vector<ConsistencyRow> rows;
};

/* Product formula vs direct computation on connect(x,y) for a in {0,1,2} and
 * j <= j_max.  Exact comparison when both factors have b1 = 0; otherwise
 * modulo u^{b_+(X)+b_+(Y)-2} (beyond that the direct side involves u-parts of
 * higher Segre classes that no input table determines). */
ConsistencyReport verify_consistency(const ManifoldData& x, const ManifoldData& y, int j_max);

}  // namespace spinsw
