#include "consum.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace spinsw {

namespace {

void check_degree(const F2Element& e, int deg, const char* where)
{
    if (e.is_zero())
        return;
    int d = 0;
    if (!e.is_homogeneous(&d) || d != deg)
        fail(Err::InternalCheck, std::string(where) + ": value is not homogeneous of the declared degree");
}

int sat_add(int a, int b)
{
    if (a == INT_MAX || b == INT_MAX)
        return INT_MAX;
    return a + b;
}

/* A value together with the least u-power at which unknown contributions may
 * start (INT_MAX = exact).  Coefficients of u^c with c >= p are partial sums
 * of whatever WAS computable; callers must not read them as final. */
struct Tracked {
    F2Element v;
    int p = INT_MAX;
};

Tracked tr_add(const Tracked& a, const Tracked& b)
{
    return {a.v + b.v, std::min(a.p, b.p)};
}

/* Unknown(a)*known(b) starts at u^{p_a + min_u(b)}, and symmetrically;
 * unknown*unknown at u^{p_a + p_b}. */
Tracked tr_mul(const Tracked& a, const Tracked& b)
{
    int da = std::min(a.v.min_u(), a.p);
    int db = std::min(b.v.min_u(), b.p);
    int p = std::min({sat_add(a.p, db), sat_add(b.p, da), sat_add(a.p, b.p)});
    return {a.v * b.v, p};
}

/* Re-interpret an element in a wider ring, renaming x_i to x_{i+shift}. */
F2Element embed(const F2Element& e, const F2Ring& target, int shift)
{
    std::vector<Monomial> ts = e.terms();
    for (Monomial& m : ts)
        m.ext <<= shift;
    return F2Element::from_terms(target, ts);
}

/* One summand of the product formula: expand the inverse equivariant Euler
 * class of f's index bundle in the mu-Laurent ring (u^3 = 0 there), multiply
 * by the substituted theta = u^a q^j (q -> q or q + mu according to which side
 * theta restricts from), then apply s's Pin(2) table to every q-power and
 * multiply by u^{b_+(f)}.  f's exterior generators are shifted by fshift, s's
 * by sshift, into the combined ring; the result lives in the mu-Laurent ring
 * over the connected sum truncated at u^{b_+(f)+b_+(s)}. */
Tracked half_term(const ManifoldData& f, const ManifoldData& s, int fshift, int sshift,
                  bool theta_gets_mu, int a, int j, int cutoff, int B)
{
    const int n = f.b1 + s.b1;
    const F2Ring EF{f.b1, 3, true, nullptr};  // f's own classes, u^3 = 0
    const F2Ring EA{n, 3, true, nullptr};     // expansion ring, u^3 = 0
    const F2Ring EW{n, B, true, nullptr};     // accumulation ring

    if (f.sigma % 16 != 0)
        fail(Err::InternalCheck, "half_term: signature not divisible by 16");
    const int dh = -f.sigma / 16;

    /* Equivariant Segre classes of f; s_{2k',Z2} = 0 identically (and exactly)
     * once even the u^2-part is above the top exterior degree. */
    const int jpmax = (f.b1 + 2) / 4;
    std::vector<Tracked> seg(jpmax + 1);
    for (int jp = 0; jp <= jpmax; ++jp) {
        auto [cls, known] = assemble_partial(equivariant_segre(f, jp, EF));
        seg[jp] = {embed(cls, EA, fshift), known};
    }

    /* psi-image of the inverse Euler class, with precision bookkeeping. */
    Tracked E{F2Element::zero(EA), INT_MAX};
    for (int k = 0; k <= cutoff; ++k)
        for (int jp = 0; jp <= std::min(k, jpmax); ++jp) {
            if (!binom_mod2(-(long long)dh - jp, k - jp))
                continue;
            F2Element term = F2Element::mu_pow(EA, -dh - k) *
                             F2Element::q_pow(EA, k - jp) * seg[jp].v;
            E = tr_add(E, {term, seg[jp].p});
        }

    std::vector<QQTerm> theta{{j, 0, F2Element::u_pow(EA, a)}};
    Tracked th{psi_substitute(theta, theta_gets_mu ? 2 : 1, EA), INT_MAX};

    Tracked arg = tr_mul(E, th);

    /* Apply s's table q^c -> SW^{Pin(2)}_s(q^c) monomial-wise (the table is
     * u-linear), then shift by u^{b_+(f)}. */
    std::map<int, Pin2Class> table;
    Tracked out{F2Element::zero(EW), INT_MAX};
    for (const Monomial& mo : arg.v.terms()) {
        auto it = table.find(mo.q);
        if (it == table.end())
            it = table.emplace(mo.q, sw_pin2(s, 0, mo.q)).first;
        const Pin2Class& sw = it->second;

        Monomial head;
        head.ext = mo.ext;
        head.mu = mo.mu;
        F2Element contrib = F2Element::monomial(EW, head) *
                            F2Element::u_pow(EW, f.b_plus + mo.u) *
                            embed(sw.value, EW, sshift);
        out.v = out.v + contrib;
        out.p = std::min(out.p, sat_add(sw.known_below, f.b_plus + mo.u));
    }
    /* Monomials of arg hidden behind its own precision limit would have been
     * multiplied by at least u^{b_+(f)} times the minimal u-power of an
     * s-table value. */
    out.p = std::min(out.p, sat_add(arg.p, f.b_plus + std::max(s.b_plus - 3, 0)));
    return out;
}

}  // namespace

ManifoldData connect(const ManifoldData& x, const ManifoldData& y)
{
    require_valid(x);
    require_valid(y);

    ManifoldData out;
    out.name = x.name + "#" + y.name;
    out.b1 = x.b1 + y.b1;
    out.b_plus = x.b_plus + y.b_plus;
    out.sigma = x.sigma + y.sigma;

    /* Quadruple-cup and q-table block sums; every mixed entry vanishes since
     * the classes can be represented on opposite sides of the neck. */
    out.quad.n = out.b1;
    out.quad.c = x.quad.c;
    for (const auto& [key, val] : y.quad.c) {
        std::array<int, 4> k = key;
        for (int& i : k)
            i += x.b1;
        out.quad.c[k] = val;
    }
    out.q2 = x.q2;
    for (std::array<int, 2> k : y.q2) {
        for (int& i : k)
            i += x.b1;
        out.q2.insert(k);
    }
    out.q3 = x.q3;
    for (std::array<int, 3> k : y.q3) {
        for (int& i : k)
            i += x.b1;
        out.q3.insert(k);
    }

    /* Z2 generators are reordered so the integral reductions come first:
     * [x integral][y integral][x extra][y extra]. */
    out.z2_rank = x.z2_rank + y.z2_rank;
    out.z2_quad.n = out.z2_rank;
    auto remap_x = [&](int i) { return i <= x.b1 ? i : i + y.b1; };
    auto remap_y = [&](int i) { return i <= y.b1 ? i + x.b1 : i + x.z2_rank; };
    for (const auto& [key, val] : x.z2_quad.c) {
        std::array<int, 4> k = key;
        for (int& i : k)
            i = remap_x(i);
        std::sort(k.begin(), k.end());
        out.z2_quad.c[k] = val;
    }
    for (const auto& [key, val] : y.z2_quad.c) {
        std::array<int, 4> k = key;
        for (int& i : k)
            i = remap_y(i);
        std::sort(k.begin(), k.end());
        out.z2_quad.c[k] = val;
    }

    require_valid(out);
    return out;
}

F2Element psi_substitute(const std::vector<QQTerm>& poly, int which, const F2Ring& ring)
{
    if (which != 1 && which != 2)
        fail(Err::InternalCheck, "psi_substitute: which must be 1 or 2");
    if (!ring.laurent_mu)
        fail(Err::RingMismatch, "psi_substitute: target ring must be Laurent in mu");
    const F2Element q_plus_mu = F2Element::q_pow(ring, 1) + F2Element::mu_pow(ring, 1);
    F2Element acc = F2Element::zero(ring);
    for (const QQTerm& t : poly) {
        if (t.e1 < 0 || t.e2 < 0)
            fail(Err::InternalCheck, "psi_substitute: negative exponent");
        int own = which == 1 ? t.e1 : t.e2;    // psi_i(q_i) = q
        int other = which == 1 ? t.e2 : t.e1;  // psi_i(q_other) = q + mu
        acc = acc + t.coeff * F2Element::q_pow(ring, own) * pow(q_plus_mu, other);
    }
    return acc;
}

int product_cutoff(const ManifoldData& x, const ManifoldData& y, int j)
{
    /* Least K with 4K > b1(X) + b1(Y) - sigma/4 + 4j + 8; past it every
     * surviving q-power is sent to 0 by both Pin(2) tables for degree
     * reasons.  Tests confirm stability under enlarging the cutoff. */
    int bound = x.b1 + y.b1 - (x.sigma + y.sigma) / 4 + 4 * j + 8;
    int k = bound / 4 + 1;
    return k < 0 ? 0 : k;
}

Pin2Class sw_product_formula(const ManifoldData& x, const ManifoldData& y, int a, int j,
                             int cutoff)
{
    require_valid(x);
    require_valid(y);
    if (a < 0 || a > 2)
        fail(Err::InternalCheck, "sw_product_formula: u-power must be 0, 1 or 2");
    if (j < 0)
        fail(Err::InternalCheck, "sw_product_formula: negative q-power");
    const int n = x.b1 + y.b1;
    if (n > 62)
        fail(Err::ValidationFailed, "sw_product_formula: combined b1 exceeds the supported range");
    const int B = x.b_plus + y.b_plus;
    const int K = cutoff < 0 ? product_cutoff(x, y, j) : cutoff;

    Tracked t1 = half_term(x, y, 0, x.b1, true, a, j, K, B);
    Tracked t2 = half_term(y, x, x.b1, 0, false, a, j, K, B);
    Tracked total = tr_add(t1, t2);

    /* Everything of strictly negative mu-weight must cancel between the two
     * summands wherever the expansion is known to be complete. */
    for (const Monomial& mo : total.v.terms())
        if (mo.mu < 0 && mo.u < total.p) {
            std::ostringstream os;
            os << "sw_product_formula(" << x.name << ", " << y.name << ", a=" << a
               << ", j=" << j << "): surviving mu^" << mo.mu << " residue at u^" << mo.u;
            fail(Err::NegativeMuResidue, os.str());
        }

    const int deg = a + 4 * j + (x.sigma + y.sigma) / 4 + B + 1;
    check_degree(total.v, deg, "sw_product_formula");

    /* Extract the mu^0 part and land in Lambda[x_1..x_n][u]/(u^B). */
    const F2Ring R_out{n, B, false, nullptr};
    std::vector<Monomial> kept;
    for (Monomial mo : total.v.mu_coefficient(0).terms()) {
        if (mo.q != 0)
            fail(Err::InternalCheck, "sw_product_formula: q-power left after applying the tables");
        kept.push_back(mo);
    }
    Pin2Class out{F2Element::from_terms(R_out, std::move(kept)),
                  total.p >= B ? INT_MAX : total.p};
    if (out.known_below != INT_MAX && out.known_below < B - 2)
        fail(Err::InternalCheck, "sw_product_formula: precision fell below u^{B-2}");
    return out;
}

ManifoldData mk3_data(int m)
{
    if (m < 1)
        fail(Err::InternalCheck, "mk3_data: m must be >= 1");
    ManifoldData md;
    md.name = m == 1 ? "K3" : std::to_string(m) + "xK3";
    md.b1 = 0;
    md.b_plus = 3 * m;
    md.sigma = -16 * m;
    md.quad.n = 0;
    md.z2_rank = 0;
    md.z2_quad.n = 0;
    return md;
}

std::vector<F2Element> mk3_table(int m)
{
    if (m < 1)
        fail(Err::InternalCheck, "mk3_table: m must be >= 1");
    const F2Ring R{0, 3 * m, false, nullptr};
    std::vector<F2Element> table(m + 1, F2Element::zero(R));
    table[m - 1] = F2Element::u_pow(R, 3 * m - 3);
    return table;
}

ConsistencyReport verify_consistency(const ManifoldData& x, const ManifoldData& y, int j_max)
{
    ManifoldData cs = connect(x, y);
    const int B = cs.b_plus;
    const bool exact = x.b1 == 0 && y.b1 == 0;

    ConsistencyReport rep;
    rep.modulus = exact ? INT_MAX : B - 2;
    for (int j = 0; j <= j_max; ++j)
        for (int a = 0; a <= 2; ++a) {
            Pin2Class direct = sw_pin2(cs, a, j);
            Pin2Class prod = sw_product_formula(x, y, a, j);
            bool ok;
            if (exact) {
                ok = direct.exact(B) && prod.exact(B) && direct.value == prod.value;
            } else {
                int m = B - 2;
                bool enough = (direct.known_below == INT_MAX || direct.known_below >= m) &&
                              (prod.known_below == INT_MAX || prod.known_below >= m);
                ok = enough && direct.value.mod_u(m) == prod.value.mod_u(m);
            }
            rep.rows.push_back({a, j, ok});
            rep.all_pass = rep.all_pass && ok;
        }
    return rep;
}

}  // namespace spinsw
