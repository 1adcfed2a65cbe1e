#include "doctest.h"

#include <bit>
#include <map>
#include <random>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "classcalc.hpp"
#include "errors.hpp"

using namespace spinsw;
using boost::multiprecision::cpp_int;

namespace {

/* Generalized binomial as the exact falling-factorial product
 * n(n-1)..(n-k+1)/k!, independent of the bit tricks under test. */
cpp_int big_binom(long long n, long long k)
{
    if (k < 0)
        return 0;
    cpp_int num = 1, den = 1;
    for (long long t = 0; t < k; ++t) {
        num *= cpp_int(n - t);
        den *= cpp_int(t + 1);
    }
    return num / den;  // exact: k! divides any product of k consecutive integers
}

/* Signed integer exterior algebra on n degree-1 generators, for oracle use:
 * monomial = bitmask, coefficient = big integer. */
using ZExt = std::map<uint64_t, cpp_int>;

int shuffle_sign(uint64_t a, uint64_t b)
{
    // parity of #{(i in a, j in b) : i > j}; oracle masks stay below bit 62
    int inv = 0;
    for (int j = 0; j < 62; ++j)
        if (b >> j & 1)
            inv += std::popcount(a & (~uint64_t(0) << (j + 1)));
    return inv % 2 ? -1 : 1;
}

ZExt zmul(const ZExt& p, const ZExt& q)
{
    ZExt r;
    for (const auto& [ma, ca] : p)
        for (const auto& [mb, cb] : q) {
            if (ma & mb)
                continue;
            r[ma | mb] += ca * cb * shuffle_sign(ma, mb);
        }
    return r;
}

ZExt z_s2(const QuadForm& f)
{
    ZExt s;
    for (const auto& [key, c] : f.c) {
        uint64_t m = 0;
        for (int i : key)
            m |= uint64_t(1) << (i - 1);
        s[m] += c;
    }
    return s;
}

QuadForm random_quad(int n, std::mt19937& rng, bool even_only = false)
{
    QuadForm f;
    f.n = n;
    if (n < 4)
        return f;
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> pick(1, n);
    int entries = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int t = 0; t < entries; ++t) {
        std::array<int, 4> key;
        std::set<int> used;
        while ((int)used.size() < 4)
            used.insert(pick(rng));
        std::copy(used.begin(), used.end(), key.begin());
        int c = coeff(rng);
        if (even_only)
            c *= 2;
        f.c[key] = c;
    }
    return f;
}

}  // namespace

TEST_CASE("binom_mod2 against the falling-factorial big integer")
{
    for (long long n = -40; n <= 40; ++n)
        for (long long k = 0; k <= 40; ++k) {
            bool expect = (big_binom(n, k) % 2) != 0;
            CHECK_MESSAGE(binom_mod2(n, k) == expect, "n=", n, " k=", k);
        }
    CHECK_FALSE(binom_mod2(5, -1));
}

TEST_CASE("binom_mod2 spot values")
{
    CHECK(binom_mod2(0, 0));
    CHECK(binom_mod2(-1, 7));              // binom(-1,k) = (-1)^k, odd for every k
    CHECK_FALSE(binom_mod2(-2, 3));        // binom(-2,3) = -4
    CHECK_FALSE(binom_mod2(4, 3));
    CHECK(binom_mod2(4, 4));
}

TEST_CASE("quad form validation")
{
    QuadForm f;
    f.n = 5;
    f.c[{1, 2, 3, 4}] = 3;
    CHECK(f.validate().empty());
    CHECK(f.any_odd());
    f.c[{1, 2, 3, 4}] = 2;
    CHECK_FALSE(f.any_odd());
    f.c[{2, 1, 3, 4}] = 1;  // not strictly increasing
    CHECK_FALSE(f.validate().empty());
    f.c.erase({2, 1, 3, 4});
    f.c[{2, 3, 4, 5}] = 1;
    CHECK(f.validate().empty());
    f.c[{2, 3, 4, 6}] = 1;  // out of range
    CHECK_FALSE(f.validate().empty());
}

TEST_CASE("segre_s2 is the parity of the quadruple form")
{
    const F2Ring R{6, 0, false, nullptr};
    QuadForm f;
    f.n = 6;
    f.c[{1, 2, 3, 4}] = 3;
    f.c[{1, 2, 5, 6}] = 2;  // even, drops out
    f.c[{3, 4, 5, 6}] = -1;
    F2Element s = segre_s2(f, R);
    F2Element expect =
        F2Element::gen_x(R, 1) * F2Element::gen_x(R, 2) * F2Element::gen_x(R, 3) *
            F2Element::gen_x(R, 4) +
        F2Element::gen_x(R, 3) * F2Element::gen_x(R, 4) * F2Element::gen_x(R, 5) *
            F2Element::gen_x(R, 6);
    CHECK(s == expect);
}

TEST_CASE("segre_s2j against the integer divided-power expansion")
{
    std::mt19937 rng(21);
    for (int it = 0; it < 40; ++it) {
        int n = std::uniform_int_distribution<int>(4, 10)(rng);
        QuadForm f = random_quad(n, rng);
        const F2Ring R{n, 0, false, nullptr};
        ZExt s2 = z_s2(f);
        ZExt power{{0, 1}};
        cpp_int fact = 1;
        for (int j = 0; j <= 2; ++j) {
            if (j > 0) {
                power = zmul(power, s2);
                fact *= j;
            }
            F2Element got = segre_s2j(f, j, R);
            std::vector<Monomial> expect_terms;
            for (const auto& [mask, c] : power) {
                REQUIRE(c % fact == 0);  // divided power is integral
                if ((c / fact) % 2 != 0)
                    expect_terms.push_back(Monomial{.ext = mask});
            }
            CHECK(got == F2Element::from_terms(R, std::move(expect_terms)));
        }
    }
}

TEST_CASE("segre_s2j edge cases")
{
    const F2Ring R{8, 0, false, nullptr};
    QuadForm f;
    f.n = 8;
    SUBCASE("j = 0 is the unit, negative j vanishes")
    {
        CHECK(segre_s2j(f, 0, R) == F2Element::one(R));
        CHECK(segre_s2j(f, -1, R).is_zero());
    }
    SUBCASE("disjoint odd entries multiply")
    {
        f.c[{1, 2, 3, 4}] = 1;
        f.c[{5, 6, 7, 8}] = 1;
        F2Element x1234 = F2Element::gen_x(R, 1) * F2Element::gen_x(R, 2) *
                          F2Element::gen_x(R, 3) * F2Element::gen_x(R, 4);
        F2Element x5678 = F2Element::gen_x(R, 5) * F2Element::gen_x(R, 6) *
                          F2Element::gen_x(R, 7) * F2Element::gen_x(R, 8);
        CHECK(segre_s2j(f, 1, R) == x1234 + x5678);
        CHECK(segre_s2j(f, 2, R) == x1234 * x5678);
        CHECK(segre_s2j(f, 3, R).is_zero());  // not enough room
    }
    SUBCASE("overlapping entries cannot pair")
    {
        f.c[{1, 2, 3, 4}] = 1;
        f.c[{1, 2, 5, 6}] = 1;  // shares {1,2}
        CHECK(segre_s2j(f, 2, R).is_zero());
    }
}

TEST_CASE("equivariant triples and partial assembly")
{
    const F2Ring R{4, 3, false, nullptr};
    EquivariantSegre es;
    es.k = 2;
    es.s = F2Element::gen_x(R, 1) * F2Element::gen_x(R, 2);
    es.t = F2Element::zero(R);
    es.r = F2Element::zero(R);
    es.t_known = false;
    es.r_known = true;

    auto [v, known] = assemble_partial(es);
    CHECK(v == es.s + F2Element::u_pow(R, 2) * es.r);
    CHECK(known == 1);  // u^1 coefficient is the first unknown level

    try {
        assemble(es);
        FAIL("assemble must refuse unknown parts the ring keeps alive");
    } catch (const calc_error& e) {
        CHECK(e.code == Err::UnknownPart);
    }

    es.t_known = true;
    auto [v2, known2] = assemble_partial(es);
    CHECK(known2 == INT_MAX);
    CHECK(assemble(es) == v2);

    // In a ring where u^1 is already dead the unknown t does not matter.
    const F2Ring R1{4, 1, false, nullptr};
    EquivariantSegre es1 = es;
    es1.s = F2Element::gen_x(R1, 1);
    es1.t = es1.r = F2Element::zero(R1);
    es1.t_known = false;
    CHECK(assemble(es1) == es1.s);
}

TEST_CASE("small powers")
{
    const F2Ring R{2, 0, false, nullptr};
    F2Element e = F2Element::one(R) + F2Element::gen_x(R, 1);
    CHECK(pow(e, 0) == F2Element::one(R));
    CHECK(pow(e, 1) == e);
    CHECK(pow(e, 2) == F2Element::one(R));  // x^2 = 0 and 2x = 0
}

TEST_CASE("twisted segre classes")
{
    const F2Ring R{4, 0, false, nullptr};
    F2Element c1 = F2Element::gen_x(R, 1) * F2Element::gen_x(R, 2);  // a degree-2 stand-in
    F2Element s0 = F2Element::one(R);

    SUBCASE("zero twist returns the input list")
    {
        std::vector<F2Element> s_list{s0, F2Element::gen_x(R, 3)};
        CHECK(twisted_segre(s_list, 3, F2Element::zero(R), 0) == s0);
        CHECK(twisted_segre(s_list, 3, F2Element::zero(R), 1) == s_list[1]);
        CHECK(twisted_segre(s_list, 3, F2Element::zero(R), 5).is_zero());
    }
    SUBCASE("rank-1 bundle with trivial classes")
    {
        // s_j(E (x) L) = binom(-1, j) c1^j = c1^j, and c1^2 = 0 here
        std::vector<F2Element> s_list{s0};
        CHECK(twisted_segre(s_list, 1, c1, 0) == s0);
        CHECK(twisted_segre(s_list, 1, c1, 1) == c1);
        CHECK(twisted_segre(s_list, 1, c1, 2).is_zero());
    }
}

TEST_CASE("inverse Euler expansion in the Laurent ring")
{
    const F2Ring L{0, 3, true, nullptr};
    SUBCASE("trivial Segre data reduces to the binomial series")
    {
        std::vector<F2Element> seg{F2Element::one(L)};
        for (int d : {0, 2, 4}) {
            F2Element got = euler_inverse_psi_elems(seg, d, 5, L);
            F2Element expect = F2Element::zero(L);
            for (int k = 0; k <= 5; ++k)
                if (binom_mod2(-d / 2, k))
                    expect = expect +
                             F2Element::mu_pow(L, -d / 2 - k) * F2Element::q_pow(L, k);
            CHECK(got == expect);
        }
    }
    SUBCASE("triple entry points agree")
    {
        const F2Ring L4{4, 3, true, nullptr};
        EquivariantSegre e0;
        e0.k = 0;
        e0.s = F2Element::one(L4);
        e0.t = e0.r = F2Element::zero(L4);
        EquivariantSegre e1;
        e1.k = 1;
        e1.s = F2Element::gen_x(L4, 1) * F2Element::gen_x(L4, 2) * F2Element::gen_x(L4, 3) *
               F2Element::gen_x(L4, 4);
        e1.t = F2Element::gen_x(L4, 1) * F2Element::gen_x(L4, 2) * F2Element::gen_x(L4, 3);
        e1.r = F2Element::gen_x(L4, 1) * F2Element::gen_x(L4, 2);
        std::vector<EquivariantSegre> seg{e0, e1};
        std::vector<F2Element> elems{assemble(e0), assemble(e1)};
        CHECK(euler_inverse_psi(seg, 2, 4, L4) == euler_inverse_psi_elems(elems, 2, 4, L4));
    }
}
