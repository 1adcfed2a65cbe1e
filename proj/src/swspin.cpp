#include "swspin.hpp"

#include <algorithm>
#include <sstream>

namespace spinsw {

std::vector<std::string> validate(const ManifoldData& md)
{
    std::vector<std::string> bad;
    if (md.b_plus < 1)
        bad.push_back("b_+ must be at least 1");
    if (md.b1 < 0)
        bad.push_back("b1 must be nonnegative");
    if (md.b1 > 62)
        bad.push_back("b1 too large for this implementation (<= 62)");
    if (md.quad.n != md.b1)
        bad.push_back("quadruple form rank differs from b1");
    for (auto& d : md.quad.validate()) bad.push_back(d);
    for (auto& p : md.q2)
        if (!(1 <= p[0] && p[0] < p[1] && p[1] <= md.b1))
            bad.push_back("q2 key {" + std::to_string(p[0]) + "," + std::to_string(p[1]) +
                          "} is not an increasing pair in 1..b1");
    for (auto& p : md.q3)
        if (!(1 <= p[0] && p[0] < p[1] && p[1] < p[2] && p[2] <= md.b1))
            bad.push_back("q3 key {" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," +
                          std::to_string(p[2]) + "} is not an increasing triple in 1..b1");
    if (md.sigma % 16 != 0)
        bad.push_back("Rokhlin: the signature of a closed smooth spin 4-manifold is divisible "
                      "by 16 (got " + std::to_string(md.sigma) + ")");
    if (md.b_plus <= 2 && md.sigma != 0)
        bad.push_back("a smooth spin 4-manifold with b_+ <= 2 has signature 0");
    if (md.b_plus == 3 && md.sigma != 0 && md.sigma != -16)
        bad.push_back("a smooth spin 4-manifold with b_+ = 3 has signature 0 or -16");
    if (md.z2_rank < md.b1)
        bad.push_back("z2 generating set must contain the " + std::to_string(md.b1) +
                      " reductions of the integral basis");
    if (md.z2_quad.n != md.z2_rank)
        bad.push_back("z2 quadruple form rank differs from z2_rank");
    for (auto& d : md.z2_quad.validate()) bad.push_back("z2 " + d);
    for (auto& [key, val] : md.z2_quad.c)
        if (val != 0 && val != 1)
            bad.push_back("z2 quadruple form entries must be 0 or 1");
    /* The z2 form restricted to the integral reductions is the quad form mod 2. */
    for (auto& [key, val] : md.quad.c) {
        if (key[3] > md.b1)
            continue;  // key validity reported above
        auto it = md.z2_quad.c.find(key);
        long long bit = it == md.z2_quad.c.end() ? 0 : (it->second & 1);
        if (bit != (val & 1))
            bad.push_back("z2 quadruple form does not restrict to the integral quadruple form "
                          "mod 2 at {" + std::to_string(key[0]) + "," + std::to_string(key[1]) +
                          "," + std::to_string(key[2]) + "," + std::to_string(key[3]) + "}");
    }
    for (auto& [key, val] : md.z2_quad.c) {
        if (key[3] > md.b1 || !(val & 1))
            continue;
        auto it = md.quad.c.find(key);
        long long c = it == md.quad.c.end() ? 0 : it->second;
        if (!(c & 1))
            bad.push_back("z2 quadruple form does not restrict to the integral quadruple form "
                          "mod 2 at {" + std::to_string(key[0]) + "," + std::to_string(key[1]) +
                          "," + std::to_string(key[2]) + "," + std::to_string(key[3]) + "}");
    }
    if (md.b_plus <= 2 && md.quad.any_odd())
        bad.push_back("u^{3-b_+}-divisibility of the equivariant Segre classes: a spin "
                      "4-manifold with b_+ <= 2 has even quadruple cup form");
    if (md.b_plus == 3 && md.sigma == -16 && md.quad.any_odd())
        bad.push_back("four-fold cup product obstruction: a smooth spin 4-manifold with "
                      "b_+ = 3 and signature -16 has even quadruple cup form");
    return bad;
}

void require_valid(const ManifoldData& md)
{
    auto bad = validate(md);
    if (!bad.empty()) {
        std::ostringstream os;
        os << "invalid manifold data";
        if (!md.name.empty()) os << " '" << md.name << "'";
        for (auto& d : bad) os << "\n  - " << d;
        fail(Err::ValidationFailed, os.str());
    }
}

F2Ring value_ring(const ManifoldData& md)
{
    return F2Ring{.n_ext = md.b1, .u_trunc = md.b_plus, .laurent_mu = false, .base = nullptr};
}

F2Element q2_class(const ManifoldData& md, const F2Ring& ring)
{
    F2Element acc = F2Element::zero(ring);
    for (auto& p : md.q2)
        acc = acc + F2Element::gen_x(ring, p[0]) * F2Element::gen_x(ring, p[1]);
    return acc;
}

F2Element q3_class(const ManifoldData& md, const F2Ring& ring)
{
    F2Element acc = F2Element::zero(ring);
    for (auto& p : md.q3)
        acc = acc + F2Element::gen_x(ring, p[0]) * F2Element::gen_x(ring, p[1]) *
                        F2Element::gen_x(ring, p[2]);
    return acc;
}

int q2_eval(const ManifoldData& md, const std::vector<long long>& a,
            const std::vector<long long>& b)
{
    if ((int)a.size() != md.b1 || (int)b.size() != md.b1)
        fail(Err::DimensionMismatch, "q2_eval: vectors must have length b1");
    int acc = 0;
    for (auto& p : md.q2) {
        long long ai = a[p[0] - 1], aj = a[p[1] - 1], bi = b[p[0] - 1], bj = b[p[1] - 1];
        acc ^= (int)((ai * bj + aj * bi) & 1);
    }
    return acc;
}

int q3_eval(const ManifoldData& md, const std::vector<long long>& a,
            const std::vector<long long>& b, const std::vector<long long>& c)
{
    if ((int)a.size() != md.b1 || (int)b.size() != md.b1 || (int)c.size() != md.b1)
        fail(Err::DimensionMismatch, "q3_eval: vectors must have length b1");
    int acc = 0;
    for (auto& p : md.q3) {
        /* mod-2 permanent of the 3x3 matrix of coordinates at (i,j,k) */
        long long m[3][3];
        for (int col = 0; col < 3; ++col) {
            m[0][col] = a[p[col] - 1];
            m[1][col] = b[p[col] - 1];
            m[2][col] = c[p[col] - 1];
        }
        long long perm = m[0][0] * (m[1][1] * m[2][2] + m[1][2] * m[2][1]) +
                         m[0][1] * (m[1][0] * m[2][2] + m[1][2] * m[2][0]) +
                         m[0][2] * (m[1][0] * m[2][1] + m[1][1] * m[2][0]);
        acc ^= (int)(perm & 1);
    }
    return acc;
}

EquivariantSegre equivariant_segre(const ManifoldData& md, int k, const F2Ring& ring)
{
    EquivariantSegre es;
    es.k = k;
    es.s = segre_s2j(md.quad, k, ring);
    es.t = F2Element::zero(ring);
    es.r = F2Element::zero(ring);
    if (k <= 0) {
        es.t_known = es.r_known = true;
    } else if (k == 1) {
        es.t = q3_class(md, ring);
        es.r = q2_class(md, ring);
        es.t_known = es.r_known = true;
    } else {
        /* Only forced vanishing is available beyond s_2. */
        es.t_known = md.b1 == 0 || 4 * k - 1 > md.b1;
        es.r_known = md.b1 == 0 || 4 * k - 2 > md.b1;
    }
    return es;
}

static void check_degree(const F2Element& e, int deg, const char* where)
{
    if (e.is_zero())
        return;
    int d = 0;
    if (!e.is_homogeneous(&d) || d != deg)
        fail(Err::InternalCheck, std::string(where) + ": value is not homogeneous of the declared degree");
}

int sw_degree(const ManifoldData& md, int m)
{
    return 2 * m + md.sigma / 4 + md.b_plus + 1;
}

int pin2_degree(const ManifoldData& md, int a, int j)
{
    return a + 4 * j + md.sigma / 4 + md.b_plus + 1;
}

F2Element sw_basic(const ManifoldData& md, int m)
{
    require_valid(md);
    if (m < 0)
        fail(Err::InternalCheck, "sw_basic: negative power");
    F2Ring R = value_ring(md);
    if (m > 0)
        return F2Element::zero(R);  // SW(x^m) = 0 for every m > 0
    F2Element v = F2Element::zero(R);
    switch (md.b_plus) {
    case 1: v = q2_class(md, R); break;
    case 2: v = q3_class(md, R); break;
    case 3: v = segre_s2j(md.quad, 1 + md.sigma / 16, R); break;
    default: break;  // b_+ > 3: identically zero
    }
    check_degree(v, sw_degree(md, m), "sw_basic");
    return v;
}

Pin2Class sw_pin2(const ManifoldData& md, int a, int j)
{
    require_valid(md);
    if (a < 0 || a > 2)
        fail(Err::InternalCheck, "sw_pin2: u-power must be 0, 1 or 2 (u^3 = 0 over a point)");
    if (j < 0)
        fail(Err::InternalCheck, "sw_pin2: negative q-power");
    F2Ring R = value_ring(md);
    Pin2Class out{F2Element::zero(R), INT_MAX};

    if (md.b_plus >= 3) {
        int k = j + 1 + md.sigma / 16;
        if (k >= 0) {
            EquivariantSegre es = equivariant_segre(md, k, R);
            auto [cls, known] = assemble_partial(es);
            out.value = F2Element::u_pow(R, a + md.b_plus - 3) * cls;
            if (known != INT_MAX) {
                out.known_below = known + a + md.b_plus - 3;
                if (out.known_below >= md.b_plus)
                    out.known_below = INT_MAX;
            }
        }
    } else if (md.b_plus == 2) {
        if (j == 0) {
            out.value = F2Element::u_pow(R, a) *
                        (q3_class(md, R) + F2Element::u_pow(R, 1) * q2_class(md, R));
        } else if (4 * j + 3 > md.b1 + 1) {
            /* degree exceeds the top of Lambda[x][u]/(u^2): forced zero */
        } else {
            fail(Err::UnsupportedPrecision,
                 "SW^{Pin(2)}(q^" + std::to_string(j) + ") for b_+ = 2 is not determined by "
                 "the q^3/q^2 tables in this degree range");
        }
    } else {  // b_plus == 1
        if (j == 0) {
            out.value = F2Element::u_pow(R, a) * q2_class(md, R);
        } else if (4 * j + 2 > md.b1) {
            /* forced zero by degree */
        } else {
            fail(Err::UnsupportedPrecision,
                 "SW^{Pin(2)}(q^" + std::to_string(j) + ") for b_+ = 1 is not determined by "
                 "the q^2 table in this degree range");
        }
    }
    check_degree(out.value, pin2_degree(md, a, j), "sw_pin2");
    return out;
}

/* z2 quadruple form on four generator indices; 0 on repeats (the tables only
 * carry the alternating part, and integral degree-1 classes square to zero). */
static int z2_entry(const ManifoldData& md, int a, int b, int c, int d)
{
    std::array<int, 4> key{a, b, c, d};
    std::sort(key.begin(), key.end());
    if (key[0] == key[1] || key[1] == key[2] || key[2] == key[3])
        return 0;
    auto it = md.z2_quad.c.find(key);
    return it == md.z2_quad.c.end() ? 0 : (int)(it->second & 1);
}

ManifoldData twist_b2(const ManifoldData& md, const std::vector<int>& A)
{
    require_valid(md);
    if (md.b_plus != 2)
        fail(Err::WrongBPlus, "twisting a single spin structure is only determined for b_+ = 2");
    if ((int)A.size() != md.z2_rank)
        fail(Err::DimensionMismatch, "twist vector must have length z2_rank");
    ManifoldData out = md;
    for (int i = 1; i <= md.b1; ++i)
        for (int j = i + 1; j <= md.b1; ++j)
            for (int k = j + 1; k <= md.b1; ++k) {
                int flip = 0;
                for (int t = 1; t <= md.z2_rank; ++t)
                    if (A[t - 1] & 1)
                        flip ^= z2_entry(md, t, i, j, k);
                if (flip) {
                    std::array<int, 3> key{i, j, k};
                    if (out.q3.count(key))
                        out.q3.erase(key);
                    else
                        out.q3.insert(key);
                }
            }
    return out;
}

int twist_defect_b1(const ManifoldData& md, const std::vector<int>& A, const std::vector<int>& B,
                    const std::vector<long long>& av, const std::vector<long long>& bv)
{
    require_valid(md);
    if (md.b_plus != 1)
        fail(Err::WrongBPlus, "the four-term twisting defect is the b_+ = 1 statement");
    if ((int)A.size() != md.z2_rank || (int)B.size() != md.z2_rank)
        fail(Err::DimensionMismatch, "twist vectors must have length z2_rank");
    if ((int)av.size() != md.b1 || (int)bv.size() != md.b1)
        fail(Err::DimensionMismatch, "integral vectors must have length b1");
    int acc = 0;
    for (int s = 1; s <= md.z2_rank; ++s) {
        if (!(A[s - 1] & 1))
            continue;
        for (int t = 1; t <= md.z2_rank; ++t) {
            if (!(B[t - 1] & 1))
                continue;
            for (int i = 1; i <= md.b1; ++i) {
                if (!(av[i - 1] & 1))
                    continue;
                for (int j = 1; j <= md.b1; ++j)
                    if (bv[j - 1] & 1)
                        acc ^= z2_entry(md, s, t, i, j);
            }
        }
    }
    return acc;
}

NonvanishingVerdict any_nonzero_sw(const ManifoldData& md)
{
    require_valid(md);
    auto key_str = [](const std::array<int, 4>& k) {
        return "{" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
               std::to_string(k[2]) + "," + std::to_string(k[3]) + "}";
    };
    if (md.b_plus == 1) {
        if (!md.q2.empty())
            return {true, "b_+ = 1: the q^2 table is nonzero, so SW(1) != 0"};
        for (auto& [key, val] : md.z2_quad.c) {
            if (!(val & 1))
                continue;
            int integral = 0;
            for (int i : key) integral += i <= md.b1;
            if (integral >= 2)
                return {true, "b_+ = 1: quadruple product " + key_str(key) +
                                  " pairs two integral classes with two mod-2 classes, so some "
                                  "twisted spin structure has SW(1) != 0"};
        }
        return {false, "b_+ = 1: q^2 vanishes and no mixed quadruple product is odd"};
    }
    if (md.b_plus == 2) {
        if (!md.q3.empty())
            return {true, "b_+ = 2: the q^3 table is nonzero, so SW(1) != 0"};
        for (auto& [key, val] : md.z2_quad.c) {
            if (!(val & 1))
                continue;
            int integral = 0;
            for (int i : key) integral += i <= md.b1;
            if (integral >= 3)
                return {true, "b_+ = 2: quadruple product " + key_str(key) +
                                  " pairs three integral classes with a mod-2 class, so some "
                                  "twisted spin structure has SW(1) != 0"};
        }
        return {false, "b_+ = 2: q^3 vanishes and no mixed quadruple product is odd"};
    }
    if (md.b_plus == 3) {
        if (md.sigma == -16)
            return {true, "b_+ = 3, sigma = -16: SW(1) = s_0(D) = 1"};
        if (md.quad.any_odd())
            return {true, "b_+ = 3, sigma = 0: SW(1) = s_2(D) != 0 (some c_I is odd)"};
        return {false, "b_+ = 3, sigma = 0: every c_I is even, so s_2(D) = 0"};
    }
    return {false, "b_+ > 3: every invariant of every spin structure vanishes"};
}

long long genus_bound(const ManifoldData& md, long long a_squared)
{
    if (a_squared % 2 != 0)
        fail(Err::HypothesisNotMet,
             "self-intersections in a spin 4-manifold are even (even intersection form)");
    NonvanishingVerdict v = any_nonzero_sw(md);
    if (!v.nonzero)
        fail(Err::HypothesisNotMet,
             "the adjunction bound needs a nonvanishing SW invariant; " + v.witness);
    long long abs2 = a_squared < 0 ? -a_squared : a_squared;
    return abs2 / 2 + 1;  // least g with 2g - 2 >= |a^2|
}

bool smoothability_obstruction(int b1, int b_plus, int sigma, const QuadForm& quad)
{
    (void)b1;
    return b_plus == 3 && sigma == -16 && quad.any_odd();
}

int default_m_max(const ManifoldData& md)
{
    int num = md.b1 - md.sigma / 4 - md.b_plus - 1;
    return num < 0 ? 0 : num / 2;
}

int default_j_max(const ManifoldData& md)
{
    int num = md.b1 - md.sigma / 4 - 2;
    return num < 0 ? 0 : num / 4;
}

}  // namespace spinsw
