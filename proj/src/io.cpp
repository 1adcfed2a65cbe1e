#include "io.hpp"

#include <climits>
#include <fstream>
#include <set>
#include <sstream>

#include "errors.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

namespace spinsw {

namespace {

[[noreturn]] void bad(const std::string& msg)
{
    fail(Err::ParseError, msg);
}

void expect_object(const json& j, const std::string& ctx)
{
    if (!j.is_object())
        bad(ctx + ": expected an object");
}

/* Strictness: an unexpected field is more likely a typo than an extension. */
void only_fields(const json& j, const std::set<std::string>& allowed, const std::string& ctx)
{
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            bad(ctx + ": unknown field \"" + it.key() + "\"");
}

const json& field(const json& j, const std::string& key, const std::string& ctx)
{
    auto it = j.find(key);
    if (it == j.end())
        bad(ctx + ": missing field \"" + key + "\"");
    return *it;
}

int expect_int(const json& j, const std::string& ctx)
{
    if (!j.is_number_integer())
        bad(ctx + ": expected an integer");
    long long v = j.get<long long>();
    if (v < INT_MIN || v > INT_MAX)
        bad(ctx + ": integer out of range");
    return (int)v;
}

long long expect_ll(const json& j, const std::string& ctx)
{
    if (!j.is_number_integer())
        bad(ctx + ": expected an integer");
    return j.get<long long>();
}

std::string expect_string(const json& j, const std::string& ctx)
{
    if (!j.is_string())
        bad(ctx + ": expected a string");
    return j.get<std::string>();
}

int expect_bit(const json& j, const std::string& ctx)
{
    int v = expect_int(j, ctx);
    if (v != 0 && v != 1)
        bad(ctx + ": expected 0 or 1");
    return v;
}

template <size_t N>
std::array<int, N> expect_index_tuple(const json& j, const std::string& ctx)
{
    if (!j.is_array() || j.size() != N)
        bad(ctx + ": expected " + std::to_string(N) + " indices");
    std::array<int, N> key{};
    for (size_t t = 0; t < N; ++t)
        key[t] = expect_int(j[t], ctx);
    return key;
}

/* Entries shaped {"i":[...], "c":v}; duplicates of the exact tuple rejected. */
QuadForm parse_quad_entries(const json& j, int n, bool bits_only, const std::string& ctx)
{
    QuadForm f;
    f.n = n;
    if (!j.is_array())
        bad(ctx + ": expected an array of {\"i\":[...],\"c\":...} entries");
    for (const json& e : j) {
        expect_object(e, ctx);
        only_fields(e, {"i", "c"}, ctx);
        std::array<int, 4> key = expect_index_tuple<4>(field(e, "i", ctx), ctx);
        long long c = bits_only ? expect_bit(field(e, "c", ctx), ctx)
                                : expect_ll(field(e, "c", ctx), ctx);
        if (f.c.count(key))
            bad(ctx + ": duplicate key");
        f.c[key] = c;
    }
    return f;
}

}  // namespace

ManifoldData manifold_from_json(const json& j)
{
    const std::string ctx = "manifold";
    expect_object(j, ctx);
    only_fields(j, {"kind", "name", "b1", "b_plus", "sigma", "quad", "q2", "q3", "z2_rank",
                    "z2_quad"},
                ctx);
    if (expect_string(field(j, "kind", ctx), ctx + ".kind") != "manifold")
        bad(ctx + ": kind must be \"manifold\"");

    ManifoldData md;
    md.name = expect_string(field(j, "name", ctx), ctx + ".name");
    md.b1 = expect_int(field(j, "b1", ctx), ctx + ".b1");
    md.b_plus = expect_int(field(j, "b_plus", ctx), ctx + ".b_plus");
    md.sigma = expect_int(field(j, "sigma", ctx), ctx + ".sigma");

    if (j.count("quad"))
        md.quad = parse_quad_entries(j["quad"], md.b1, false, ctx + ".quad");
    else
        md.quad.n = md.b1;

    if (j.count("q2")) {
        const json& a = j["q2"];
        if (!a.is_array())
            bad(ctx + ".q2: expected an array of [i,j,bit] triples");
        std::set<std::array<int, 2>> seen;
        for (const json& e : a) {
            if (!e.is_array() || e.size() != 3)
                bad(ctx + ".q2: expected [i,j,bit]");
            std::array<int, 2> key{expect_int(e[0], ctx + ".q2"), expect_int(e[1], ctx + ".q2")};
            int bit = expect_bit(e[2], ctx + ".q2");
            if (!seen.insert(key).second)
                bad(ctx + ".q2: duplicate key");
            if (bit)
                md.q2.insert(key);
        }
    }
    if (j.count("q3")) {
        const json& a = j["q3"];
        if (!a.is_array())
            bad(ctx + ".q3: expected an array of [i,j,k,bit] entries");
        std::set<std::array<int, 3>> seen;
        for (const json& e : a) {
            if (!e.is_array() || e.size() != 4)
                bad(ctx + ".q3: expected [i,j,k,bit]");
            std::array<int, 3> key{expect_int(e[0], ctx + ".q3"), expect_int(e[1], ctx + ".q3"),
                                   expect_int(e[2], ctx + ".q3")};
            int bit = expect_bit(e[3], ctx + ".q3");
            if (!seen.insert(key).second)
                bad(ctx + ".q3: duplicate key");
            if (bit)
                md.q3.insert(key);
        }
    }

    md.z2_rank = j.count("z2_rank") ? expect_int(j["z2_rank"], ctx + ".z2_rank") : md.b1;
    if (j.count("z2_quad")) {
        md.z2_quad = parse_quad_entries(j["z2_quad"], md.z2_rank, true, ctx + ".z2_quad");
    } else {
        /* Default: the mod-2 reduction of the integral quadruple form. */
        md.z2_quad.n = md.z2_rank;
        for (const auto& [key, c] : md.quad.c)
            if (c % 2 != 0)
                md.z2_quad.c[key] = 1;
    }
    return md;
}

FamilyData family_from_json(const json& j)
{
    const std::string ctx = "family";
    expect_object(j, ctx);
    only_fields(j, {"kind", "name", "b_plus", "sigma", "b1", "base", "w", "segre"}, ctx);
    if (expect_string(field(j, "kind", ctx), ctx + ".kind") != "family")
        bad(ctx + ": kind must be \"family\"");

    FamilyData fd;
    fd.name = expect_string(field(j, "name", ctx), ctx + ".name");
    fd.b_plus = expect_int(field(j, "b_plus", ctx), ctx + ".b_plus");
    fd.sigma = expect_int(field(j, "sigma", ctx), ctx + ".sigma");
    fd.b1 = expect_int(field(j, "b1", ctx), ctx + ".b1");

    const json& jb = field(j, "base", ctx);
    expect_object(jb, ctx + ".base");
    only_fields(jb, {"basis", "unit", "mult"}, ctx + ".base");
    auto base = std::make_shared<BaseAlgebra>();
    const json& basis = field(jb, "basis", ctx + ".base");
    if (!basis.is_array() || basis.empty())
        bad(ctx + ".base.basis: expected a non-empty array");
    for (const json& g : basis) {
        expect_object(g, ctx + ".base.basis");
        only_fields(g, {"name", "deg"}, ctx + ".base.basis");
        base->basis.push_back({expect_string(field(g, "name", ctx), ctx + ".base.basis.name"),
                               expect_int(field(g, "deg", ctx), ctx + ".base.basis.deg")});
    }
    const int n = (int)base->basis.size();
    base->unit = expect_int(field(jb, "unit", ctx + ".base"), ctx + ".base.unit");
    if (base->unit < 0 || base->unit >= n)
        bad(ctx + ".base.unit: index out of range");

    /* Sparse product table: unstated pairs are zero, except against the unit. */
    base->mult.assign(n, std::vector<std::vector<int>>(n));
    std::set<std::pair<int, int>> given;
    const json& jm = field(jb, "mult", ctx + ".base");
    if (!jm.is_array())
        bad(ctx + ".base.mult: expected an array of [i,j,[k,...]] entries");
    for (const json& e : jm) {
        if (!e.is_array() || e.size() != 3)
            bad(ctx + ".base.mult: expected [i,j,[k,...]]");
        int i = expect_int(e[0], ctx + ".base.mult");
        int jx = expect_int(e[1], ctx + ".base.mult");
        if (i < 0 || i >= n || jx < 0 || jx >= n)
            bad(ctx + ".base.mult: index out of range");
        if (!e[2].is_array())
            bad(ctx + ".base.mult: product must be a list of basis indices");
        std::vector<int> prod;
        for (const json& kj : e[2]) {
            int k = expect_int(kj, ctx + ".base.mult");
            if (k < 0 || k >= n)
                bad(ctx + ".base.mult: product index out of range");
            prod.push_back(k);
        }
        std::sort(prod.begin(), prod.end());
        if (std::adjacent_find(prod.begin(), prod.end()) != prod.end())
            bad(ctx + ".base.mult: repeated basis index in a product");
        if (!given.insert({std::min(i, jx), std::max(i, jx)}).second)
            bad(ctx + ".base.mult: duplicate pair");
        base->mult[i][jx] = prod;
        base->mult[jx][i] = std::move(prod);
    }
    for (int p = 0; p < n; ++p)
        if (!given.count({std::min(base->unit, p), std::max(base->unit, p)})) {
            base->mult[base->unit][p] = {p};
            base->mult[p][base->unit] = {p};
        }
    fd.base = std::move(base);

    const F2Ring R = family_ring(fd);
    auto parse_elem = [&](const json& je, const std::string& ectx) {
        if (!je.is_array())
            bad(ectx + ": expected a list of basis indices");
        F2Element v = F2Element::zero(R);
        std::set<int> seen;
        for (const json& ij : je) {
            int idx = expect_int(ij, ectx);
            if (idx < 0 || idx >= n)
                bad(ectx + ": basis index out of range");
            if (!seen.insert(idx).second)
                bad(ectx + ": repeated basis index");
            v = v + F2Element::base_gen(R, idx);
        }
        return v;
    };

    const json& jw = field(j, "w", ctx);
    if (!jw.is_array())
        bad(ctx + ".w: expected an array of classes");
    for (size_t l = 0; l < jw.size(); ++l)
        fd.w.push_back(parse_elem(jw[l], ctx + ".w[" + std::to_string(l) + "]"));

    const json& js = field(j, "segre", ctx);
    if (!js.is_array())
        bad(ctx + ".segre: expected an array of {\"k\":...,\"s\":...} entries");
    for (const json& e : js) {
        expect_object(e, ctx + ".segre");
        only_fields(e, {"k", "s", "t", "r"}, ctx + ".segre");
        int k = expect_int(field(e, "k", ctx + ".segre"), ctx + ".segre.k");
        if (fd.segre.count(k))
            bad(ctx + ".segre: duplicate k");
        EquivariantSegre es;
        es.k = k;
        es.s = parse_elem(field(e, "s", ctx + ".segre"), ctx + ".segre.s");
        es.t = e.count("t") ? parse_elem(e["t"], ctx + ".segre.t") : F2Element::zero(R);
        es.r = e.count("r") ? parse_elem(e["r"], ctx + ".segre.r") : F2Element::zero(R);
        fd.segre.emplace(k, std::move(es));
    }
    return fd;
}

InputDocument parse_document(const json& j)
{
    expect_object(j, "document");
    std::string kind = expect_string(field(j, "kind", "document"), "document.kind");
    InputDocument doc;
    if (kind == "manifold") {
        doc.kind = InputDocument::Kind::Manifold;
        doc.manifold = manifold_from_json(j);
    } else if (kind == "family") {
        doc.kind = InputDocument::Kind::Family;
        doc.family = family_from_json(j);
    } else if (kind == "pair") {
        doc.kind = InputDocument::Kind::Pair;
        only_fields(j, {"kind", "x", "y"}, "pair");
        doc.manifold = manifold_from_json(field(j, "x", "pair"));
        doc.second = manifold_from_json(field(j, "y", "pair"));
    } else {
        bad("document: unknown kind \"" + kind + "\"");
    }
    return doc;
}

static json load_json(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        bad("cannot open " + path);
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        bad(path + ": " + e.what());
    }
}

InputDocument parse_file(const std::string& path)
{
    return parse_document(load_json(path));
}

ManifoldData parse_manifold_file(const std::string& path)
{
    InputDocument doc = parse_file(path);
    if (doc.kind != InputDocument::Kind::Manifold)
        bad(path + ": expected a manifold file");
    return doc.manifold;
}

FamilyData parse_family_file(const std::string& path)
{
    InputDocument doc = parse_file(path);
    if (doc.kind != InputDocument::Kind::Family)
        bad(path + ": expected a family file");
    return doc.family;
}

ordered_json manifold_to_json(const ManifoldData& md)
{
    ordered_json o;
    o["kind"] = "manifold";
    o["name"] = md.name;
    o["b1"] = md.b1;
    o["b_plus"] = md.b_plus;
    o["sigma"] = md.sigma;
    o["quad"] = ordered_json::array();
    for (const auto& [key, c] : md.quad.c) {
        ordered_json e;
        e["i"] = key;
        e["c"] = c;
        o["quad"].push_back(std::move(e));
    }
    o["q2"] = ordered_json::array();
    for (const auto& key : md.q2)
        o["q2"].push_back(ordered_json::array({key[0], key[1], 1}));
    o["q3"] = ordered_json::array();
    for (const auto& key : md.q3)
        o["q3"].push_back(ordered_json::array({key[0], key[1], key[2], 1}));
    o["z2_rank"] = md.z2_rank;
    o["z2_quad"] = ordered_json::array();
    for (const auto& [key, c] : md.z2_quad.c) {
        ordered_json e;
        e["i"] = key;
        e["c"] = c;
        o["z2_quad"].push_back(std::move(e));
    }
    return o;
}

std::string manifold_to_text(const ManifoldData& md)
{
    return manifold_to_json(md).dump(2) + "\n";
}

}  // namespace spinsw
