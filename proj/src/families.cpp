#include "families.hpp"

#include <algorithm>
#include <climits>
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

F2Element u_shift(const F2Element& e, int delta)
{
    std::vector<Monomial> ts = e.terms();
    for (Monomial& m : ts) {
        m.u += delta;
        if (m.u < 0)
            fail(Err::InternalCheck, "u_shift: negative u-power");
    }
    return F2Element::from_terms(e.ring(), std::move(ts));
}

F2Element w_at(const FamilyData& fd, int l)
{
    if (l < 0 || l > fd.b_plus)
        return F2Element::zero(family_ring(fd));
    return fd.w[l];
}

/* s + u t + u^2 r for a supplied triple; parts flagged unknown enter as 0 and
 * the caller decides whether that is acceptable. */
F2Element assemble_triple(const EquivariantSegre& es, const F2Ring& R)
{
    return es.s + F2Element::u_pow(R, 1) * es.t + F2Element::u_pow(R, 2) * es.r;
}

/* The class s_{2k,Z_2} needed at level k, or MissingSegre.  Degree forcing:
 * with b1 = 0 the class is zero once 4k exceeds the top base degree; with
 * b1 > 0 even the u^2-part must be out of range, i.e. 4k-2 above top. */
F2Element segre_at(const FamilyData& fd, int k, const F2Ring& R)
{
    if (k < 0)
        return F2Element::zero(R);
    if (k == 0)
        return F2Element::one(R);
    auto it = fd.segre.find(k);
    if (it != fd.segre.end()) {
        if (!it->second.t_known || !it->second.r_known)
            fail(Err::MissingSegre,
                 "s_{2k,Z2} at k=" + std::to_string(k) + " has undetermined u-parts");
        return assemble_triple(it->second, R);
    }
    int top = fd.base->max_deg();
    bool forced = fd.b1 == 0 ? 4 * k > top : 4 * k - 2 > top;
    if (forced)
        return F2Element::zero(R);
    fail(Err::MissingSegre, "s_{2k,Z2} at k=" + std::to_string(k) +
                                " is neither supplied nor forced to vanish by degree");
}

}  // namespace

F2Ring family_ring(const FamilyData& fd)
{
    return F2Ring{0, 0, false, fd.base};
}

std::vector<std::string> validate_family(const FamilyData& fd)
{
    std::vector<std::string> diags;
    if (!fd.base) {
        diags.push_back("no base algebra supplied");
        return diags;
    }
    for (const std::string& d : fd.base->validate())
        diags.push_back("base algebra: " + d);
    if (!diags.empty())
        return diags;

    const F2Ring R = family_ring(fd);
    if (fd.b_plus < 1)
        diags.push_back("b_plus must be at least 1");
    if (fd.sigma % 16 != 0)
        diags.push_back("signature of a spin 4-manifold is divisible by 16");
    if (fd.b1 < 0)
        diags.push_back("b1 must be nonnegative");
    if ((int)fd.w.size() != fd.b_plus + 1) {
        diags.push_back("w must list w_0..w_{b_plus}");
        return diags;
    }
    if (!(fd.w[0] == F2Element::one(R)))
        diags.push_back("w_0 must be the unit");
    for (int l = 0; l <= fd.b_plus; ++l) {
        if (!fd.w[l].ring().compatible(R)) {
            diags.push_back("w_" + std::to_string(l) + " lives in a different ring");
            continue;
        }
        int d = 0;
        if (!fd.w[l].is_homogeneous(&d) || (!fd.w[l].is_zero() && d != l))
            diags.push_back("w_" + std::to_string(l) + " is not homogeneous of degree " +
                            std::to_string(l));
    }
    for (const auto& [k, es] : fd.segre) {
        std::string at = "segre class at k=" + std::to_string(k);
        if (k < 1) {
            diags.push_back(at + ": only k >= 1 may be supplied (s_0 = 1 is implied)");
            continue;
        }
        if (es.k != k)
            diags.push_back(at + ": stored level disagrees with its key");
        if (!es.s.ring().compatible(R) || !es.t.ring().compatible(R) ||
            !es.r.ring().compatible(R)) {
            diags.push_back(at + ": parts live in a different ring");
            continue;
        }
        int d = 0;
        if (!es.s.is_homogeneous(&d) || (!es.s.is_zero() && d != 4 * k))
            diags.push_back(at + ": s-part is not homogeneous of degree 4k");
        if (!es.t.is_homogeneous(&d) || (!es.t.is_zero() && d != 4 * k - 1))
            diags.push_back(at + ": t-part is not homogeneous of degree 4k-1");
        if (!es.r.is_homogeneous(&d) || (!es.r.is_zero() && d != 4 * k - 2))
            diags.push_back(at + ": r-part is not homogeneous of degree 4k-2");
        if (es.s.max_u() > 0 || es.t.max_u() > 0 || es.r.max_u() > 0)
            diags.push_back(at + ": parts must be u-free");
        if (fd.b1 == 0) {
            if (!es.t_known || !es.r_known)
                diags.push_back(at + ": u-parts are forced for b1 = 0 and cannot be undetermined");
            if (!es.t.is_zero() || !es.r.is_zero())
                diags.push_back(at + ": u-parts vanish when b1 = 0");
        }
        if ((!es.t_known && !es.t.is_zero()) || (!es.r_known && !es.r.is_zero()))
            diags.push_back(at + ": a part flagged undetermined must be stored as 0");
    }
    return diags;
}

void require_valid_family(const FamilyData& fd)
{
    std::vector<std::string> diags = validate_family(fd);
    if (diags.empty())
        return;
    std::ostringstream os;
    os << "family data rejected:";
    for (const std::string& d : diags)
        os << "\n  - " << d;
    fail(Err::ValidationFailed, os.str());
}

F2Element equivariant_euler_hplus(const FamilyData& fd)
{
    require_valid_family(fd);
    const F2Ring R = family_ring(fd);
    F2Element e = F2Element::zero(R);
    for (int l = 0; l <= fd.b_plus; ++l)
        e = e + F2Element::u_pow(R, l) * fd.w[fd.b_plus - l];
    check_degree(e, fd.b_plus, "equivariant_euler_hplus");
    return e;
}

std::vector<std::string> constraint_check(const FamilyData& fd)
{
    std::vector<std::string> diags = validate_family(fd);
    if (!diags.empty())
        return diags;
    const F2Ring R = family_ring(fd);

    /* sigma < 0 forces the three top Stiefel-Whitney classes of H^+ to die;
     * this is exactly the k = 0 instance of the mod-u^3 constraint. */
    if (fd.sigma < 0)
        for (int l = std::max(0, fd.b_plus - 2); l <= fd.b_plus; ++l)
            if (!fd.w[l].is_zero())
                diags.push_back("w_" + std::to_string(l) +
                                "(H^+) must vanish when the signature is negative");

    F2Element top3 = w_at(fd, fd.b_plus) + F2Element::u_pow(R, 1) * w_at(fd, fd.b_plus - 1) +
                     F2Element::u_pow(R, 2) * w_at(fd, fd.b_plus - 2);
    for (const auto& [k, es] : fd.segre) {
        if (k < 1 + fd.sigma / 16)
            continue;
        F2Element prod = top3 * assemble_triple(es, R);
        /* Check each u-level of the product that the supplied data determines. */
        int checkable = !es.t_known ? 1 : !es.r_known ? 2 : 3;
        for (int c = 0; c < checkable; ++c)
            if (!prod.u_coefficient(c).is_zero()) {
                diags.push_back("constraint fails at k=" + std::to_string(k) + ": u^" +
                                std::to_string(c) +
                                " coefficient of (w_top + u w + u^2 w) * s_{2k,Z2} is nonzero");
                break;
            }
    }
    return diags;
}

F2Element families_sw_pin2(const FamilyData& fd, int j)
{
    require_valid_family(fd);
    if (j < 0)
        fail(Err::InternalCheck, "families_sw_pin2: negative q-power");
    const F2Ring R = family_ring(fd);
    const int k = j + 1 + fd.sigma / 16;

    F2Element S = segre_at(fd, k, R);
    if (S.is_zero())
        return S;
    F2Element e = equivariant_euler_hplus(fd);
    F2Element P = e * S;
    for (int c = 0; c < 3; ++c)
        if (!P.u_coefficient(c).is_zero())
            fail(Err::NotDivisibleByU3,
                 "families_sw_pin2: e * s_{2k,Z2} is not divisible by u^3 (the "
                 "realizability constraint fails for this presentation)");
    F2Element out = reduce_by_monic_u(u_shift(P, -3), e, fd.b_plus);
    check_degree(out, 4 * j + fd.sigma / 4 + fd.b_plus + 1, "families_sw_pin2");
    return out;
}

F2Element families_sw(const FamilyData& fd, int m)
{
    require_valid_family(fd);
    if (m < 0)
        fail(Err::InternalCheck, "families_sw: negative power");
    if (m % 2 != 0)
        fail(Err::HypothesisNotMet, "families_sw is stated for even powers only");
    if (!w_at(fd, fd.b_plus).is_zero())
        fail(Err::NoChamber, "families_sw needs a chamber: w_{b_plus}(H^+) must vanish");
    const F2Ring R = family_ring(fd);
    const int k = m / 2 + 1 + fd.sigma / 16;

    F2Element out = F2Element::zero(R);
    if (k >= 0) {
        EquivariantSegre es;
        if (k == 0) {
            es.k = 0;
            es.s = F2Element::one(R);
            es.t = es.r = F2Element::zero(R);
        } else {
            auto it = fd.segre.find(k);
            if (it != fd.segre.end()) {
                es = it->second;
            } else {
                int top = fd.base->max_deg();
                bool forced = fd.b1 == 0 ? 4 * k > top : 4 * k - 2 > top;
                if (!forced)
                    fail(Err::MissingSegre,
                         "s_{2k,Z2} at k=" + std::to_string(k) +
                             " is neither supplied nor forced to vanish by degree");
                es.k = k;
                es.s = es.t = es.r = F2Element::zero(R);
            }
        }
        /* u^0 coefficient of sum_{l=1..3} u^{l-3} w_{b_+-l} s_{2k,Z2}. */
        struct Part {
            int l;
            const F2Element* cls;
            bool known;
        };
        const Part parts[3] = {{1, &es.r, es.r_known}, {2, &es.t, es.t_known}, {3, &es.s, true}};
        for (const Part& pt : parts) {
            F2Element wl = w_at(fd, fd.b_plus - pt.l);
            if (wl.is_zero())
                continue;
            if (!pt.known)
                fail(Err::MissingSegre, "families_sw: an undetermined u-part of s_{2k,Z2} "
                                        "multiplies a nonzero w class");
            out = out + wl * *pt.cls;
        }
    }
    check_degree(out, 2 * m + fd.sigma / 4 + fd.b_plus + 1, "families_sw");
    return out;
}

FamilyData family_from_manifold(const ManifoldData& md)
{
    require_valid(md);
    if (md.b1 != 0)
        fail(Err::HypothesisNotMet,
             "family_from_manifold: only b1 = 0 manifolds reduce to a point base directly");
    auto base = std::make_shared<BaseAlgebra>();
    base->basis = {{"1", 0}};
    base->unit = 0;
    base->mult = {{{0}}};

    FamilyData fd;
    fd.name = md.name;
    fd.b_plus = md.b_plus;
    fd.sigma = md.sigma;
    fd.b1 = 0;
    fd.base = std::move(base);
    const F2Ring R = family_ring(fd);
    fd.w.assign(md.b_plus + 1, F2Element::zero(R));
    fd.w[0] = F2Element::one(R);
    return fd;
}

int families_default_m_max(const FamilyData& fd)
{
    require_valid_family(fd);
    /* SW(x^m) is u-free over the base, so 2m + sigma/4 + b_+ + 1 must stay
     * within the base's top degree. */
    int top = fd.base->max_deg();
    int m = (top - fd.sigma / 4 - fd.b_plus - 1) / 2;
    m -= m % 2 != 0 ? 1 : 0;
    return std::max(m, 0);
}

int families_default_j_max(const FamilyData& fd)
{
    require_valid_family(fd);
    int top = fd.base->max_deg() + fd.b_plus - 1;
    int j = (top - fd.sigma / 4 - fd.b_plus - 1) / 4;
    return std::max(j, 0);
}

}  // namespace spinsw
