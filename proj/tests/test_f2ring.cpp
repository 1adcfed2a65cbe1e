#include "doctest.h"

#include <random>

#include "errors.hpp"
#include "f2ring.hpp"

using namespace spinsw;

namespace {

/* Random element with a handful of monomials, exercising every variable the
 * ring supports. */
F2Element random_element(const F2Ring& R, std::mt19937& rng, int n_terms = 5)
{
    std::vector<Monomial> ts;
    std::uniform_int_distribution<int> small(0, 3);
    const uint64_t mask = R.n_ext >= 64 ? ~uint64_t(0) : (uint64_t(1) << R.n_ext) - 1;
    for (int t = 0; t < n_terms; ++t) {
        Monomial m;
        m.ext = rng() & mask;
        m.u = small(rng);
        m.q = small(rng);
        m.mu = R.laurent_mu ? small(rng) - 2 : 0;
        ts.push_back(m);
    }
    return F2Element::from_terms(R, std::move(ts));
}

template <typename F>
Err thrown_code(F&& f)
{
    try {
        f();
    } catch (const calc_error& e) {
        return e.code;
    }
    return (Err)-1;  // no throw
}

}  // namespace

TEST_CASE("characteristic-2 addition laws")
{
    std::mt19937 rng(11);
    const F2Ring R{6, 4, true, nullptr};
    for (int it = 0; it < 200; ++it) {
        F2Element a = random_element(R, rng);
        F2Element b = random_element(R, rng);
        F2Element c = random_element(R, rng);
        CHECK(a + a == F2Element::zero(R));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + F2Element::zero(R) == a);
    }
}

TEST_CASE("multiplication laws")
{
    std::mt19937 rng(12);
    const F2Ring R{6, 5, true, nullptr};
    for (int it = 0; it < 100; ++it) {
        F2Element a = random_element(R, rng);
        F2Element b = random_element(R, rng);
        F2Element c = random_element(R, rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * F2Element::one(R) == a);
        CHECK(a * F2Element::zero(R) == F2Element::zero(R));
    }
}

TEST_CASE("exterior generators square to zero and commute in even blocks")
{
    const F2Ring R{4, 0, false, nullptr};
    F2Element x1 = F2Element::gen_x(R, 1);
    F2Element x2 = F2Element::gen_x(R, 2);
    CHECK(x1 * x1 == F2Element::zero(R));
    CHECK(x1 * x2 == x2 * x1);  // mod 2 there is no sign to track
    CHECK((x1 * x2) * (x1 * x2) == F2Element::zero(R));
}

TEST_CASE("u-truncation")
{
    const F2Ring R{2, 3, false, nullptr};
    CHECK(F2Element::u_pow(R, 3) == F2Element::zero(R));
    CHECK(F2Element::u_pow(R, 2) * F2Element::u_pow(R, 1) == F2Element::zero(R));
    CHECK_FALSE(F2Element::u_pow(R, 2).is_zero());

    const F2Ring R0{2, 0, false, nullptr};  // no truncation
    CHECK_FALSE(F2Element::u_pow(R0, 12).is_zero());
}

TEST_CASE("mu is only allowed in Laurent rings")
{
    const F2Ring R{2, 0, false, nullptr};
    CHECK(thrown_code([&] { F2Element::mu_pow(R, 1); }) == Err::InternalCheck);
    const F2Ring L{2, 0, true, nullptr};
    CHECK(F2Element::mu_pow(L, -3).max_mu() == -3);
}

TEST_CASE("negative exponents are rejected where meaningless")
{
    const F2Ring R{1, 0, false, nullptr};
    CHECK(thrown_code([&] { F2Element::u_pow(R, -1); }) == Err::InternalCheck);
    CHECK(thrown_code([&] { F2Element::q_pow(R, -2); }) == Err::InternalCheck);
}

TEST_CASE("cross-ring operations are refused")
{
    const F2Ring A{2, 3, false, nullptr};
    const F2Ring B{3, 3, false, nullptr};
    F2Element a = F2Element::one(A), b = F2Element::one(B);
    CHECK(thrown_code([&] { (void)(a + b); }) == Err::RingMismatch);
    CHECK(thrown_code([&] { (void)(a * b); }) == Err::RingMismatch);
}

TEST_CASE("coefficient extraction")
{
    const F2Ring R{3, 0, true, nullptr};
    F2Element e = F2Element::mu_pow(R, -1) * F2Element::q_pow(R, 2) +
                  F2Element::u_pow(R, 3) * F2Element::gen_x(R, 1) + F2Element::gen_x(R, 2);
    CHECK(e.mu_coefficient(-1) == F2Element::q_pow(R, 2));
    CHECK(e.mu_coefficient(0) ==
          F2Element::u_pow(R, 3) * F2Element::gen_x(R, 1) + F2Element::gen_x(R, 2));
    CHECK(e.u_coefficient(3) == F2Element::gen_x(R, 1));
    CHECK(e.u_coefficient(1) == F2Element::zero(R));
    CHECK(e.mod_u(1) == F2Element::mu_pow(R, -1) * F2Element::q_pow(R, 2) +
                            F2Element::gen_x(R, 2));
    CHECK(e.min_u() == 0);
    CHECK(e.max_u() == 3);
    CHECK(e.min_mu() == -1);
    CHECK(e.max_mu() == 0);
    CHECK(e.max_q() == 2);
    CHECK(F2Element::zero(R).min_u() == INT_MAX);
    CHECK(F2Element::zero(R).max_u() == -1);
}

TEST_CASE("degrees and homogeneity")
{
    const F2Ring R{4, 0, true, nullptr};
    // deg x = 1, u = 1, q = 4, mu = 4
    F2Element h = F2Element::gen_x(R, 1) * F2Element::gen_x(R, 2) * F2Element::u_pow(R, 2) +
                  F2Element::q_pow(R, 1);
    int d = -1;
    CHECK(h.is_homogeneous(&d));
    CHECK(d == 4);
    F2Element g = h + F2Element::u_pow(R, 1);
    CHECK_FALSE(g.is_homogeneous(nullptr));
    CHECK(F2Element::zero(R).is_homogeneous(&d));

    F2Element m = F2Element::mu_pow(R, -2) * F2Element::q_pow(R, 2);
    CHECK(m.is_homogeneous(&d));
    CHECK(d == 0);  // mu^-2 q^2 is degree-balanced
}

TEST_CASE("string rendering is canonical")
{
    const F2Ring R{3, 0, false, nullptr};
    F2Element e = F2Element::u_pow(R, 2) * F2Element::gen_x(R, 3) +
                  F2Element::gen_x(R, 1) * F2Element::gen_x(R, 2);
    CHECK(e.to_string() == "x1^x2 + u^2.x3");
    CHECK(F2Element::zero(R).to_string() == "0");
    CHECK(F2Element::one(R).to_string() == "1");
    CHECK((e + e).to_string() == "0");
}

TEST_CASE("base algebra monomials")
{
    auto base = std::make_shared<BaseAlgebra>();
    base->basis = {{"1", 0}, {"w", 1}, {"w^2", 2}};
    base->unit = 0;
    base->mult = {{{0}, {1}, {2}}, {{1}, {2}, {}}, {{2}, {}, {}}};
    REQUIRE(base->validate().empty());
    CHECK(base->max_deg() == 2);

    const F2Ring R{0, 0, false, base};
    F2Element w = F2Element::base_gen(R, 1);
    CHECK((w * w).to_string() == "w^2");
    CHECK((w * w * w).is_zero());
    CHECK(F2Element::one(R) == F2Element::base_gen(R, 0));  // unit is normalized
    int d = 0;
    CHECK((w * w).is_homogeneous(&d));
    CHECK(d == 2);
}

TEST_CASE("base algebra validation catches broken tables")
{
    BaseAlgebra b;
    b.basis = {{"1", 0}, {"w", 1}};
    b.unit = 0;
    b.mult = {{{0}, {1}}, {{1}, {0}}};  // w*w = 1 breaks the grading
    CHECK_FALSE(b.validate().empty());

    b.mult = {{{0}, {1}}, {{1}, {}}};
    CHECK(b.validate().empty());

    b.unit = 5;
    CHECK_FALSE(b.validate().empty());
}

TEST_CASE("division by a monic u-polynomial")
{
    std::mt19937 rng(13);
    const F2Ring R{3, 0, false, nullptr};
    // e = u^3 + u^2 x1 (monic of degree 3 in u)
    F2Element e = F2Element::u_pow(R, 3) +
                  F2Element::u_pow(R, 2) * F2Element::gen_x(R, 1);
    for (int it = 0; it < 50; ++it) {
        F2Element a = random_element(R, rng, 6);
        F2Element r = reduce_by_monic_u(a, e, 3);
        CHECK(r.max_u() < 3);
        // adding any multiple of e does not change the remainder
        F2Element g = random_element(R, rng, 3);
        CHECK(reduce_by_monic_u(a + g * e, e, 3) == r);
        // reduction is idempotent
        CHECK(reduce_by_monic_u(r, e, 3) == r);
    }
    CHECK(reduce_by_monic_u(e, e, 3).is_zero());

    F2Element not_monic = F2Element::u_pow(R, 3) * F2Element::gen_x(R, 1);
    CHECK(thrown_code([&] { reduce_by_monic_u(F2Element::one(R), not_monic, 3); }) ==
          Err::NotMonic);
    CHECK(thrown_code([&] { reduce_by_monic_u(F2Element::one(R), e, 2); }) == Err::NotMonic);
}

TEST_CASE("compatible rings share base algebras by value or pointer")
{
    auto b1 = std::make_shared<BaseAlgebra>();
    b1->basis = {{"1", 0}};
    b1->unit = 0;
    b1->mult = {{{0}}};
    auto b2 = std::make_shared<BaseAlgebra>(*b1);

    const F2Ring A{0, 0, false, b1};
    const F2Ring B{0, 0, false, b2};
    const F2Ring C{0, 0, false, nullptr};
    CHECK(A.compatible(B));
    CHECK_FALSE(A.compatible(C));
    CHECK(F2Element::one(A) == F2Element::one(B));
}
