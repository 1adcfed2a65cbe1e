#include "cli.hpp"

#include <algorithm>
#include <climits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "consum.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "io.hpp"

namespace spinsw {

namespace {

int exit_code(Err c)
{
    switch (c) {
    case Err::ParseError:
        return 2;
    case Err::InternalCheck:
    case Err::NegativeMuResidue:
        return 3;
    default:
        return 1;
    }
}

std::string power_label(int a, int j)
{
    std::string s;
    if (a == 1)
        s = "u";
    else if (a > 1)
        s = "u^" + std::to_string(a);
    if (j > 0) {
        if (!s.empty())
            s += ".";
        s += j == 1 ? "q" : "q^" + std::to_string(j);
    }
    return s.empty() ? "1" : s;
}

std::string sw_label(int m)
{
    return m == 0 ? "SW(1)" : "SW(x^" + std::to_string(m) + ")";
}

bool is_err(const calc_error& e, Err c)
{
    return e.code == c;
}

struct Flags {
    int m_max = -1;
    int j_max = -1;
    bool json = false;
};

int cmd_compute(const std::string& path, Flags fl, std::ostream& out)
{
    ManifoldData md = parse_manifold_file(path);
    require_valid(md);
    int m_max = fl.m_max >= 0 ? fl.m_max : default_m_max(md);
    int j_max = fl.j_max >= 0 ? fl.j_max : default_j_max(md);
    NonvanishingVerdict nv = any_nonzero_sw(md);
    bool ob = smoothability_obstruction(md.b1, md.b_plus, md.sigma, md.quad);

    nlohmann::ordered_json rep;
    rep["kind"] = "report";
    rep["subcommand"] = "compute";
    rep["name"] = md.name;
    rep["b1"] = md.b1;
    rep["b_plus"] = md.b_plus;
    rep["sigma"] = md.sigma;
    rep["sw"] = nlohmann::ordered_json::array();
    rep["pin2"] = nlohmann::ordered_json::array();

    if (!fl.json)
        out << "manifold " << md.name << ": b1=" << md.b1 << " b_plus=" << md.b_plus
            << " sigma=" << md.sigma << "\n";

    for (int m = 0; m <= m_max; ++m) {
        F2Element v = sw_basic(md, m);
        if (fl.json) {
            nlohmann::ordered_json row;
            row["m"] = m;
            row["value"] = v.to_string();
            rep["sw"].push_back(std::move(row));
        } else {
            out << sw_label(m) << " = " << v.to_string() << "\n";
        }
    }

    for (int j = 0; j <= j_max; ++j)
        for (int a = 0; a <= 2; ++a) {
            nlohmann::ordered_json row;
            row["a"] = a;
            row["j"] = j;
            std::string text;
            try {
                Pin2Class pc = sw_pin2(md, a, j);
                text = pc.value.to_string();
                row["value"] = text;
                if (!pc.exact(md.b_plus)) {
                    text += " (mod u^" + std::to_string(pc.known_below) + ")";
                    row["known_below"] = pc.known_below;
                }
            } catch (const calc_error& e) {
                if (!is_err(e, Err::UnsupportedPrecision))
                    throw;
                text = "undetermined";
                row["value"] = nullptr;
                row["undetermined"] = true;
            }
            if (fl.json)
                rep["pin2"].push_back(std::move(row));
            else
                out << "SW_Pin2(" << power_label(a, j) << ") = " << text << "\n";
        }

    if (fl.json) {
        rep["nonvanishing"] = nlohmann::ordered_json();
        rep["nonvanishing"]["nonzero"] = nv.nonzero;
        rep["nonvanishing"]["witness"] = nv.witness;
        rep["obstructed"] = ob;
        out << rep.dump(2) << "\n";
    } else {
        out << "nonvanishing: " << (nv.nonzero ? "yes — " + nv.witness : "no") << "\n";
        out << "smoothability: " << (ob ? "OBSTRUCTED" : "NO_OBSTRUCTION") << "\n";
    }
    return 0;
}

// Two positional files, or a single "pair" document carrying both summands.
std::pair<ManifoldData, ManifoldData> load_two(const std::string& px, const std::string& py)
{
    if (!py.empty())
        return {parse_manifold_file(px), parse_manifold_file(py)};
    InputDocument doc = parse_file(px);
    if (doc.kind != InputDocument::Kind::Pair)
        throw calc_error(Err::ParseError, px + ": expected a pair file when only one is given");
    return {std::move(doc.manifold), std::move(doc.second)};
}

int cmd_connect(const std::string& px, const std::string& py, std::ostream& out)
{
    auto [x, y] = load_two(px, py);
    out << manifold_to_text(connect(x, y));
    return 0;
}

int cmd_verify_product(const std::string& px, const std::string& py, int j_max, bool as_json,
                       std::ostream& out)
{
    auto [x, y] = load_two(px, py);
    ConsistencyReport rep = verify_consistency(x, y, j_max);
    const int B = x.b_plus + y.b_plus;

    if (as_json) {
        nlohmann::ordered_json o;
        o["kind"] = "report";
        o["subcommand"] = "verify-product";
        o["x"] = x.name;
        o["y"] = y.name;
        o["b_plus"] = B;
        if (rep.modulus == INT_MAX)
            o["comparison"] = "exact";
        else
            o["comparison"] = "mod u^" + std::to_string(rep.modulus);
        o["rows"] = nlohmann::ordered_json::array();
        for (const ConsistencyRow& r : rep.rows) {
            nlohmann::ordered_json row;
            row["a"] = r.a;
            row["j"] = r.j;
            row["pass"] = r.pass;
            o["rows"].push_back(std::move(row));
        }
        o["all_pass"] = rep.all_pass;
        out << o.dump(2) << "\n";
        return rep.all_pass ? 0 : 3;
    }

    out << "connected sum: " << x.name << "#" << y.name << "  b_plus=" << B << "\n";
    if (rep.modulus == INT_MAX)
        out << "comparison: exact\n";
    else
        out << "comparison: mod u^" << rep.modulus << "\n";
    for (int j = 0; j <= j_max; ++j) {
        std::vector<int> failed;
        for (const ConsistencyRow& r : rep.rows)
            if (r.j == j && !r.pass)
                failed.push_back(r.a);
        if (failed.empty()) {
            out << "PASS j=" << j << "\n";
        } else {
            out << "FAIL j=" << j << " (a=";
            for (size_t t = 0; t < failed.size(); ++t)
                out << (t ? "," : "") << failed[t];
            out << ")\n";
        }
    }
    if (rep.all_pass)
        out << "PASS j=0.." << j_max << "\n";
    else
        out << "FAIL\n";
    return rep.all_pass ? 0 : 3;
}

int cmd_obstruct(const std::string& path, bool as_json, std::ostream& out)
{
    /* No validation on purpose: the interesting inputs here are exactly the
     * ones no smooth spin 4-manifold can realize. */
    ManifoldData md = parse_manifold_file(path);
    bool ob = smoothability_obstruction(md.b1, md.b_plus, md.sigma, md.quad);
    if (as_json) {
        nlohmann::ordered_json o;
        o["kind"] = "report";
        o["subcommand"] = "obstruct";
        o["name"] = md.name;
        o["obstructed"] = ob;
        out << o.dump(2) << "\n";
    } else {
        out << (ob ? "OBSTRUCTED" : "NO_OBSTRUCTION") << "\n";
    }
    return 0;
}

int cmd_families(const std::string& path, Flags fl, std::ostream& out)
{
    FamilyData fd = parse_family_file(path);
    require_valid_family(fd);
    std::vector<std::string> violations = constraint_check(fd);
    F2Element e = equivariant_euler_hplus(fd);

    int m_max = fl.m_max >= 0 ? fl.m_max : families_default_m_max(fd);
    int j_max = fl.j_max >= 0 ? fl.j_max : families_default_j_max(fd);

    nlohmann::ordered_json rep;
    rep["kind"] = "report";
    rep["subcommand"] = "families";
    rep["name"] = fd.name;
    rep["b_plus"] = fd.b_plus;
    rep["sigma"] = fd.sigma;
    rep["b1"] = fd.b1;
    rep["euler"] = e.to_string();
    rep["constraint"] = violations;

    if (!fl.json) {
        out << "family " << fd.name << ": b_plus=" << fd.b_plus << " sigma=" << fd.sigma
            << " b1=" << fd.b1 << "\n";
        out << "e_Z2(H+) = " << e.to_string() << "\n";
        if (violations.empty()) {
            out << "constraint: ok\n";
        } else {
            out << "constraint: VIOLATED\n";
            for (const std::string& v : violations)
                out << "  - " << v << "\n";
        }
    }
    if (!violations.empty()) {
        if (fl.json)
            out << rep.dump(2) << "\n";
        return 1;  // the theorems' hypotheses fail for this presentation
    }

    rep["sw"] = nlohmann::ordered_json::array();
    rep["pin2"] = nlohmann::ordered_json::array();
    for (int m = 0; m <= m_max; m += 2) {
        nlohmann::ordered_json row;
        row["m"] = m;
        std::string text;
        try {
            F2Element v = families_sw(fd, m);
            text = v.to_string();
            row["value"] = text;
        } catch (const calc_error& e2) {
            if (is_err(e2, Err::NoChamber)) {
                text = "no chamber";
                row["value"] = nullptr;
                row["no_chamber"] = true;
            } else if (is_err(e2, Err::MissingSegre)) {
                text = "undetermined (missing s_{2k,Z2} data)";
                row["value"] = nullptr;
                row["undetermined"] = true;
            } else {
                throw;
            }
        }
        if (fl.json)
            rep["sw"].push_back(std::move(row));
        else
            out << sw_label(m) << " = " << text << "\n";
    }
    for (int j = 0; j <= j_max; ++j) {
        nlohmann::ordered_json row;
        row["j"] = j;
        std::string text;
        try {
            F2Element v = families_sw_pin2(fd, j);
            text = v.to_string();
            row["value"] = text;
        } catch (const calc_error& e2) {
            if (!is_err(e2, Err::MissingSegre))
                throw;
            text = "undetermined (missing s_{2k,Z2} data)";
            row["value"] = nullptr;
            row["undetermined"] = true;
        }
        if (fl.json)
            rep["pin2"].push_back(std::move(row));
        else
            out << "SW_Pin2(" << power_label(0, j) << ") = " << text << "\n";
    }
    if (fl.json)
        out << rep.dump(2) << "\n";
    return 0;
}

int cmd_twist(const std::string& path, const std::vector<int>& bits, std::ostream& out)
{
    ManifoldData md = parse_manifold_file(path);
    require_valid(md);
    ManifoldData tw = twist_b2(md, bits);
    out << manifold_to_text(tw);
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"mod-2 Seiberg-Witten invariants of spin 4-manifold data"};
    app.require_subcommand(1);

    std::string file1, file2;
    Flags fl;
    int vp_jmax = 3;
    std::vector<int> twist_bits;

    CLI::App* c_compute = app.add_subcommand("compute", "full invariant report for a manifold");
    c_compute->add_option("file", file1, "manifold file")->required();
    c_compute->add_option("--m-max", fl.m_max, "largest power of the basic invariant");
    c_compute->add_option("--j-max", fl.j_max, "largest q-power of the Pin(2) table");
    c_compute->add_flag("--json", fl.json, "machine-readable report");

    CLI::App* c_connect = app.add_subcommand("connect", "emit the connected-sum manifold file");
    c_connect->add_option("x", file1, "first manifold file, or a pair file")->required();
    c_connect->add_option("y", file2, "second manifold file");

    CLI::App* c_verify =
        app.add_subcommand("verify-product", "product formula vs direct computation");
    c_verify->add_option("x", file1, "first manifold file, or a pair file")->required();
    c_verify->add_option("y", file2, "second manifold file");
    c_verify->add_option("--j-max", vp_jmax, "largest q-power to compare (default 3)");
    c_verify->add_flag("--json", fl.json, "machine-readable report");

    CLI::App* c_obstruct = app.add_subcommand("obstruct", "smoothability verdict for raw data");
    c_obstruct->add_option("file", file1, "manifold file")->required();
    c_obstruct->add_flag("--json", fl.json, "machine-readable report");

    CLI::App* c_families = app.add_subcommand("families", "families invariants over a base");
    c_families->add_option("file", file1, "family file")->required();
    c_families->add_option("--m-max", fl.m_max, "largest (even) power");
    c_families->add_option("--j-max", fl.j_max, "largest q-power");
    c_families->add_flag("--json", fl.json, "machine-readable report");

    CLI::App* c_twist = app.add_subcommand("twist", "twist a b_+=2 spin structure");
    c_twist->add_option("file", file1, "manifold file")->required();
    c_twist->add_option("--a", twist_bits, "twisting class as 0/1 bits over the z2 generators")
        ->required()
        ->delimiter(',');

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c_compute->parsed())
            return cmd_compute(file1, fl, out);
        if (c_connect->parsed())
            return cmd_connect(file1, file2, out);
        if (c_verify->parsed())
            return cmd_verify_product(file1, file2, vp_jmax, fl.json, out);
        if (c_obstruct->parsed())
            return cmd_obstruct(file1, fl.json, out);
        if (c_families->parsed())
            return cmd_families(file1, fl, out);
        if (c_twist->parsed())
            return cmd_twist(file1, twist_bits, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const calc_error& e) {
        err << "error (" << err_name(e.code) << "): " << e.what() << "\n";
        return exit_code(e.code);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace spinsw
