#include "classcalc.hpp"

#include <algorithm>
#include <climits>

namespace spinsw {

bool binom_mod2(long long n, long long k)
{
    if (k < 0)
        return false;
    if (n >= 0)
        return k <= n && (n & k) == k;
    /* binom(n,k) = (-1)^k binom(-n+k-1, k); the sign dies mod 2. */
    long long m = -n + k - 1;
    return (m & k) == k;
}

std::vector<std::string> QuadForm::validate() const
{
    std::vector<std::string> bad;
    if (n < 0)
        bad.push_back("quadruple form: negative rank");
    for (auto& [key, val] : c) {
        bool inc = key[0] >= 1 && key[0] < key[1] && key[1] < key[2] && key[2] < key[3] &&
                   key[3] <= n;
        if (!inc)
            bad.push_back("quadruple form: key {" + std::to_string(key[0]) + "," +
                          std::to_string(key[1]) + "," + std::to_string(key[2]) + "," +
                          std::to_string(key[3]) + "} is not a strictly increasing 4-subset of 1.." +
                          std::to_string(n));
        (void)val;
    }
    return bad;
}

bool QuadForm::any_odd() const
{
    for (auto& [key, val] : c)
        if (val & 1)
            return true;
    return false;
}

static uint64_t key_mask(const std::array<int, 4>& key)
{
    uint64_t m = 0;
    for (int i : key) m |= uint64_t(1) << (i - 1);
    return m;
}

F2Element segre_s2(const QuadForm& f, const F2Ring& ring)
{
    return segre_s2j(f, 1, ring);
}

F2Element segre_s2j(const QuadForm& f, int j, const F2Ring& ring)
{
    if (j < 0)
        return F2Element::zero(ring);
    if (j == 0)
        return F2Element::one(ring);
    std::vector<uint64_t> odd;
    for (auto& [key, val] : f.c)
        if (val & 1)
            odd.push_back(key_mask(key));
    /* Products over j pairwise disjoint supports, each chosen once (the
     * divided power); masks are enumerated in increasing order. */
    F2Element acc = F2Element::zero(ring);
    std::vector<Monomial> terms;
    auto dfs = [&](auto&& self, size_t from, int left, uint64_t mask) -> void {
        if (left == 0) {
            terms.push_back(Monomial{.ext = mask});
            return;
        }
        for (size_t i = from; i < odd.size(); ++i)
            if (!(mask & odd[i]))
                self(self, i + 1, left - 1, mask | odd[i]);
    };
    dfs(dfs, 0, j, 0);
    for (const Monomial& m : terms)
        acc = acc + F2Element::monomial(ring, m);
    return acc;
}

F2Element assemble(const EquivariantSegre& es)
{
    const F2Ring& R = es.s.ring();
    int trunc = R.u_trunc;
    bool need_t = trunc == 0 || trunc > 1;
    bool need_r = trunc == 0 || trunc > 2;
    if ((need_t && !es.t_known) || (need_r && !es.r_known))
        fail(Err::UnknownPart, "equivariant Segre class: u-part not determined by the input data");
    return es.s + F2Element::u_pow(R, 1) * es.t + F2Element::u_pow(R, 2) * es.r;
}

std::pair<F2Element, int> assemble_partial(const EquivariantSegre& es)
{
    const F2Ring& R = es.s.ring();
    F2Element v = es.s + F2Element::u_pow(R, 1) * es.t + F2Element::u_pow(R, 2) * es.r;
    int known_below = INT_MAX;
    if (!es.t_known)
        known_below = 1;
    else if (!es.r_known)
        known_below = 2;
    return {v, known_below};
}

F2Element pow(const F2Element& e, int k)
{
    if (k < 0)
        fail(Err::InternalCheck, "pow: negative exponent");
    F2Element r = F2Element::one(e.ring());
    for (int i = 0; i < k; ++i) r = r * e;
    return r;
}

F2Element twisted_segre(const std::vector<F2Element>& s_list, int d, const F2Element& c1, int j)
{
    const F2Ring& R = c1.ring();
    F2Element acc = F2Element::zero(R);
    for (int l = 0; l <= j; ++l) {
        if (l >= (int)s_list.size())
            break;
        if (s_list[l].is_zero())
            continue;
        if (!binom_mod2(-(long long)d - l, j - l))
            continue;
        acc = acc + s_list[l] * pow(c1, j - l);
    }
    return acc;
}

F2Element euler_inverse_psi_elems(const std::vector<F2Element>& seg, int d, int cutoff,
                                  const F2Ring& ring)
{
    if (cutoff < 0)
        fail(Err::CutoffTooSmall, "inverse Euler expansion: negative cutoff");
    if (d % 2 != 0)
        fail(Err::InternalCheck, "inverse Euler expansion: virtual rank must be even");
    if (!ring.laurent_mu)
        fail(Err::RingMismatch, "inverse Euler expansion needs a Laurent ring");
    const long long dh = d / 2;
    F2Element acc = F2Element::zero(ring);
    for (int k = 0; k <= cutoff; ++k) {
        F2Element inner = F2Element::zero(ring);
        for (int j = 0; j <= k && j < (int)seg.size(); ++j) {
            if (!binom_mod2(-dh - j, k - j))
                continue;
            inner = inner + F2Element::q_pow(ring, k - j) * seg[j];
        }
        acc = acc + F2Element::mu_pow(ring, (int)(-dh - k)) * inner;
    }
    return acc;
}

F2Element euler_inverse_psi(const std::vector<EquivariantSegre>& seg, int d, int cutoff,
                            const F2Ring& ring)
{
    std::vector<F2Element> elems;
    elems.reserve(seg.size());
    for (const EquivariantSegre& es : seg) elems.push_back(assemble(es));
    return euler_inverse_psi_elems(elems, d, cutoff, ring);
}

}  // namespace spinsw
