#include "f2ring.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <sstream>

namespace spinsw {

std::vector<std::string> BaseAlgebra::validate() const
{
    std::vector<std::string> bad;
    const int n = (int)basis.size();
    if (n == 0) {
        bad.push_back("base algebra: empty basis");
        return bad;
    }
    if (unit < 0 || unit >= n) {
        bad.push_back("base algebra: unit index out of range");
        return bad;
    }
    if (basis[unit].deg != 0)
        bad.push_back("base algebra: unit must have degree 0");
    for (int i = 0; i < n; ++i)
        if (basis[i].deg < 0)
            bad.push_back("base algebra: negative degree on " + basis[i].name);
    if ((int)mult.size() != n) {
        bad.push_back("base algebra: multiplication table has wrong size");
        return bad;
    }
    for (int i = 0; i < n; ++i) {
        if ((int)mult[i].size() != n) {
            bad.push_back("base algebra: multiplication table row has wrong size");
            return bad;
        }
        for (int j = 0; j < n; ++j) {
            int prev = -1;
            for (int k : mult[i][j]) {
                if (k < 0 || k >= n) {
                    bad.push_back("base algebra: product index out of range");
                    return bad;
                }
                if (k <= prev)
                    bad.push_back("base algebra: product list not strictly increasing");
                prev = k;
            }
        }
    }
    for (int j = 0; j < n; ++j)
        if (mult[unit][j] != std::vector<int>{j})
            bad.push_back("base algebra: unit does not act as identity on " + basis[j].name);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (mult[i][j] != mult[j][i])
                bad.push_back("base algebra: not commutative at (" + basis[i].name + ", " +
                              basis[j].name + ")");
            for (int k : mult[i][j])
                if (basis[k].deg != basis[i].deg + basis[j].deg)
                    bad.push_back("base algebra: not graded at (" + basis[i].name + ", " +
                                  basis[j].name + ")");
        }
    /* Associativity over all triples, as parity vectors. */
    auto mul_vec = [&](const std::vector<char>& v, int j) {
        std::vector<char> w(n, 0);
        for (int i = 0; i < n; ++i)
            if (v[i])
                for (int k : mult[i][j]) w[k] ^= 1;
        return w;
    };
    for (int i = 0; i < n && bad.empty(); ++i)
        for (int j = 0; j < n && bad.empty(); ++j) {
            std::vector<char> ij(n, 0);
            for (int k : mult[i][j]) ij[k] = 1;
            for (int k = 0; k < n; ++k) {
                std::vector<char> jk(n, 0);
                for (int t : mult[j][k]) jk[t] = 1;
                if (mul_vec(ij, k) != mul_vec(jk, i)) {
                    bad.push_back("base algebra: not associative at (" + basis[i].name + ", " +
                                  basis[j].name + ", " + basis[k].name + ")");
                    break;
                }
            }
        }
    return bad;
}

int BaseAlgebra::max_deg() const
{
    int d = 0;
    for (auto& g : basis) d = std::max(d, g.deg);
    return d;
}

bool F2Ring::compatible(const F2Ring& o) const
{
    if (n_ext != o.n_ext || u_trunc != o.u_trunc || laurent_mu != o.laurent_mu)
        return false;
    if (!base && !o.base)
        return true;
    if (!base || !o.base)
        return false;
    return base == o.base || *base == *o.base;
}

bool mono_less(const Monomial& a, const Monomial& b)
{
    if (a.mu != b.mu) return a.mu < b.mu;
    if (a.q != b.q) return a.q < b.q;
    if (a.u != b.u) return a.u < b.u;
    if (a.ext != b.ext) return a.ext < b.ext;
    return a.base < b.base;
}

void F2Element::canonicalize()
{
    for (auto& m : terms_) {
        if (m.u < 0 || m.q < 0)
            fail(Err::InternalCheck, "negative u or q exponent");
        if (m.mu != 0 && !ring_.laurent_mu)
            fail(Err::InternalCheck, "mu in a non-Laurent ring");
        if (ring_.n_ext < 64 && (m.ext >> ring_.n_ext) != 0)
            fail(Err::InternalCheck, "exterior generator out of range");
        if (ring_.base) {
            if (m.base < 0)
                m.base = ring_.base->unit;
            else if (m.base >= (int)ring_.base->basis.size())
                fail(Err::InternalCheck, "base index out of range");
        } else if (m.base != -1) {
            fail(Err::InternalCheck, "base index in a ring without base algebra");
        }
    }
    if (ring_.u_trunc > 0)
        std::erase_if(terms_, [&](const Monomial& m) { return m.u >= ring_.u_trunc; });
    std::sort(terms_.begin(), terms_.end(), mono_less);
    /* a + a = 0: equal monomials cancel in pairs. */
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (size_t i = 0; i < terms_.size();) {
        size_t j = i;
        while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
        if ((j - i) & 1) out.push_back(terms_[i]);
        i = j;
    }
    terms_ = std::move(out);
}

F2Element F2Element::zero(const F2Ring& ring) { return F2Element(ring); }

F2Element F2Element::monomial(const F2Ring& ring, const Monomial& m)
{
    F2Element e(ring);
    e.terms_.push_back(m);
    e.canonicalize();
    return e;
}

F2Element F2Element::from_terms(const F2Ring& ring, std::vector<Monomial> terms)
{
    F2Element e(ring);
    e.terms_ = std::move(terms);
    e.canonicalize();
    return e;
}

F2Element F2Element::one(const F2Ring& ring) { return monomial(ring, Monomial{}); }

F2Element F2Element::gen_x(const F2Ring& ring, int i)
{
    if (i < 1 || i > ring.n_ext)
        fail(Err::InternalCheck, "gen_x: index out of range");
    return monomial(ring, Monomial{.ext = uint64_t(1) << (i - 1)});
}

F2Element F2Element::u_pow(const F2Ring& ring, int k)
{
    return monomial(ring, Monomial{.u = k});
}

F2Element F2Element::q_pow(const F2Ring& ring, int k)
{
    return monomial(ring, Monomial{.q = k});
}

F2Element F2Element::mu_pow(const F2Ring& ring, int k)
{
    return monomial(ring, Monomial{.mu = k});
}

F2Element F2Element::base_gen(const F2Ring& ring, int idx)
{
    return monomial(ring, Monomial{.base = idx});
}

F2Element operator+(const F2Element& a, const F2Element& b)
{
    if (!a.ring_.compatible(b.ring_))
        fail(Err::RingMismatch, "adding elements of different rings");
    F2Element r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    /* Merge of two sorted sets; equal monomials cancel. */
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        if (a.terms_[i] == b.terms_[j]) {
            ++i, ++j;
        } else if (mono_less(a.terms_[i], b.terms_[j])) {
            r.terms_.push_back(a.terms_[i++]);
        } else {
            r.terms_.push_back(b.terms_[j++]);
        }
    }
    r.terms_.insert(r.terms_.end(), a.terms_.begin() + i, a.terms_.end());
    r.terms_.insert(r.terms_.end(), b.terms_.begin() + j, b.terms_.end());
    return r;
}

F2Element operator*(const F2Element& a, const F2Element& b)
{
    if (!a.ring_.compatible(b.ring_))
        fail(Err::RingMismatch, "multiplying elements of different rings");
    const F2Ring& R = a.ring_;
    F2Element r(R);
    for (const Monomial& ma : a.terms_)
        for (const Monomial& mb : b.terms_) {
            if (ma.ext & mb.ext)
                continue;  // x_i^2 = 0
            Monomial m;
            m.ext = ma.ext | mb.ext;
            m.u = ma.u + mb.u;
            if (R.u_trunc > 0 && m.u >= R.u_trunc)
                continue;
            m.q = ma.q + mb.q;
            m.mu = ma.mu + mb.mu;
            if (!R.base) {
                m.base = -1;
                r.terms_.push_back(m);
            } else {
                for (int k : R.base->mult[ma.base][mb.base]) {
                    m.base = k;
                    r.terms_.push_back(m);
                }
            }
        }
    r.canonicalize();
    return r;
}

bool operator==(const F2Element& a, const F2Element& b)
{
    return a.ring_.compatible(b.ring_) && a.terms_ == b.terms_;
}

F2Element F2Element::mu_coefficient(int k) const
{
    F2Element r(ring_);
    for (const Monomial& m : terms_)
        if (m.mu == k) {
            Monomial c = m;
            c.mu = 0;
            r.terms_.push_back(c);
        }
    return r;  // already sorted: mu was constant on the selected range
}

F2Element F2Element::u_coefficient(int c) const
{
    F2Element r(ring_);
    for (const Monomial& m : terms_)
        if (m.u == c) {
            Monomial t = m;
            t.u = 0;
            r.terms_.push_back(t);
        }
    std::sort(r.terms_.begin(), r.terms_.end(), mono_less);
    return r;
}

int F2Element::min_u() const
{
    int v = INT_MAX;
    for (const Monomial& m : terms_) v = std::min(v, (int)m.u);
    return v;
}

int F2Element::max_u() const
{
    int v = -1;
    for (const Monomial& m : terms_) v = std::max(v, (int)m.u);
    return v;
}

int F2Element::max_mu() const
{
    int v = INT_MIN;
    for (const Monomial& m : terms_) v = std::max(v, (int)m.mu);
    return v;
}

int F2Element::min_mu() const
{
    int v = INT_MAX;
    for (const Monomial& m : terms_) v = std::min(v, (int)m.mu);
    return v;
}

int F2Element::max_q() const
{
    int v = 0;
    for (const Monomial& m : terms_) v = std::max(v, (int)m.q);
    return v;
}

int F2Element::mono_degree(const Monomial& m) const
{
    int d = std::popcount(m.ext) + m.u + 4 * (m.q + m.mu);
    if (ring_.base && m.base >= 0)
        d += ring_.base->basis[m.base].deg;
    return d;
}

bool F2Element::is_homogeneous(int* deg) const
{
    if (terms_.empty()) {
        if (deg) *deg = 0;
        return true;
    }
    int d = mono_degree(terms_[0]);
    for (const Monomial& m : terms_)
        if (mono_degree(m) != d)
            return false;
    if (deg) *deg = d;
    return true;
}

F2Element F2Element::mod_u(int c) const
{
    F2Element r(ring_);
    for (const Monomial& m : terms_)
        if (m.u < c)
            r.terms_.push_back(m);
    return r;
}

std::string F2Element::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const Monomial& m : terms_) {
        if (!first_term)
            os << " + ";
        first_term = false;
        std::vector<std::string> parts;
        auto pow = [](const char* v, int k) {
            return k == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(k);
        };
        if (m.mu != 0) parts.push_back(pow("mu", m.mu));
        if (m.q != 0) parts.push_back(pow("q", m.q));
        if (m.u != 0) parts.push_back(pow("u", m.u));
        if (m.ext) {
            std::string xs;
            for (int i = 0; i < 64; ++i)
                if (m.ext >> i & 1) {
                    if (!xs.empty()) xs += "^";
                    xs += "x" + std::to_string(i + 1);
                }
            parts.push_back(xs);
        }
        if (ring_.base && m.base >= 0 && m.base != ring_.base->unit)
            parts.push_back(ring_.base->basis[m.base].name);
        if (parts.empty()) {
            os << "1";
        } else {
            for (size_t i = 0; i < parts.size(); ++i)
                os << (i ? "." : "") << parts[i];
        }
    }
    return os.str();
}

F2Element reduce_by_monic_u(const F2Element& a, const F2Element& e, int deg_u)
{
    if (!a.ring().compatible(e.ring()))
        fail(Err::RingMismatch, "reduce_by_monic_u: ring mismatch");
    if (deg_u < 0 || e.max_u() != deg_u)
        fail(Err::NotMonic, "reduce_by_monic_u: wrong top u-degree");
    if (!(e.u_coefficient(deg_u) == F2Element::one(a.ring())))
        fail(Err::NotMonic, "reduce_by_monic_u: leading u-coefficient is not 1");
    F2Element r = a;
    while (r.max_u() >= deg_u) {
        int m = r.max_u();
        F2Element c = r.u_coefficient(m);
        /* Subtract c * u^{m-deg_u} * e; the u^m part cancels since e is monic. */
        r = r + c * F2Element::u_pow(a.ring(), m - deg_u) * e;
    }
    return r;
}

}  // namespace spinsw
