#pragma once

/* Exact arithmetic in the graded-commutative F_2 algebras this project lives in:
 *
 *     Lambda[x_1..x_n]  (x)  F_2[u]/(u^r)  (x)  F_2[q]  (x)  F_2[mu, mu^{-1}]  (x)  A
 *
 * with deg x_i = 1, deg u = 1, deg q = deg mu = 4, and A an optional finite
 * graded base algebra (used for families over a base space).  An element is a
 * canonically sorted set of monomials; all coefficients are 1 and addition is
 * symmetric difference, so a + a = 0 holds by construction.  Everything is a
 * value; no operation mutates its inputs. */

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"

namespace spinsw {

/* Finite graded-commutative unital F_2 algebra given by a multiplication table.
 * mult[i][j] lists the basis indices (sorted, no repeats) of basis_i * basis_j. */
struct BaseAlgebra {
    struct Gen {
        std::string name;
        int deg = 0;
        bool operator==(const Gen&) const = default;
    };
    std::vector<Gen> basis;
    int unit = 0;  // index of the multiplicative identity, degree 0
    std::vector<std::vector<std::vector<int>>> mult;

    /* Structural diagnostics: well-formed table, unit acts as identity,
     * commutative, graded, associative over all triples.  Empty == valid. */
    std::vector<std::string> validate() const;
    int max_deg() const;
    bool operator==(const BaseAlgebra&) const = default;
};

struct F2Ring {
    int n_ext = 0;      // exterior generators x1..xn, n <= 64
    int u_trunc = 0;    // u^u_trunc = 0; 0 means no truncation
    bool laurent_mu = false;
    std::shared_ptr<const BaseAlgebra> base;

    bool compatible(const F2Ring& o) const;
};

struct Monomial {
    uint64_t ext = 0;  // bit i-1 set <=> x_i present
    int32_t u = 0;
    int32_t q = 0;
    int32_t mu = 0;    // may be negative in Laurent rings
    int32_t base = -1; // basis index, or -1 in rings without a base algebra

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/* Canonical term order: lexicographic on (mu, q, u, ext, base). */
bool mono_less(const Monomial& a, const Monomial& b);

class F2Element {
public:
    F2Element() = default;
    explicit F2Element(F2Ring ring) : ring_(std::move(ring)) {}

    static F2Element zero(const F2Ring& ring);
    static F2Element one(const F2Ring& ring);
    static F2Element gen_x(const F2Ring& ring, int i);        // 1-based
    static F2Element u_pow(const F2Ring& ring, int k);
    static F2Element q_pow(const F2Ring& ring, int k);
    static F2Element mu_pow(const F2Ring& ring, int k);
    static F2Element base_gen(const F2Ring& ring, int idx);
    /* Single monomial; drops it if the u-truncation kills it. */
    static F2Element monomial(const F2Ring& ring, const Monomial& m);
    /* Canonicalized element from raw terms (sorts, cancels pairs, truncates). */
    static F2Element from_terms(const F2Ring& ring, std::vector<Monomial> terms);

    const F2Ring& ring() const { return ring_; }
    /* Ref-qualified: calling on a temporary hands the storage over instead of
     * returning a reference about to dangle. */
    const std::vector<Monomial>& terms() const& { return terms_; }
    std::vector<Monomial> terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }

    friend F2Element operator+(const F2Element& a, const F2Element& b);
    friend F2Element operator*(const F2Element& a, const F2Element& b);
    friend bool operator==(const F2Element& a, const F2Element& b);

    /* Terms with the exact mu-exponent k, with that power of mu removed. */
    F2Element mu_coefficient(int k) const;
    /* Terms with u-exponent exactly c, with the power of u removed. */
    F2Element u_coefficient(int c) const;
    int min_u() const;  // INT_MAX on zero
    int max_u() const;  // -1 on zero
    int max_mu() const;
    int min_mu() const;
    int max_q() const;

    int mono_degree(const Monomial& m) const;
    /* True iff all terms share one degree (vacuously true for 0); *deg gets it. */
    bool is_homogeneous(int* deg = nullptr) const;

    /* Truncate away u-powers >= c (comparison modulo u^c). */
    F2Element mod_u(int c) const;

    /* Canonically ordered rendering, e.g. "x1^x2 + u^2.x3"; zero is "0". */
    std::string to_string() const;

private:
    F2Ring ring_;
    std::vector<Monomial> terms_;  // sorted by mono_less, pairwise distinct

    void canonicalize();  // sort + cancel equal pairs + drop truncated
};

/* Remainder of a modulo e, where e must be monic of degree deg_u as a
 * polynomial in u over the u-free part of the ring. */
F2Element reduce_by_monic_u(const F2Element& a, const F2Element& e, int deg_u);

}  // namespace spinsw
