#include "calib/bernstein.hpp"
#include "calib/normalform.hpp"
#include "calib/octalg.hpp"
#include "calib/region.hpp"
#include "calib/theoremsuite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace calib;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat parse_eps(const std::string& s) {
    Rat e;
    try {
        e = Rat::parse(s);
    } catch (const Error& ex) {
        throw UsageError(std::string("--eps: ") + ex.what());
    }
    if (e.sign() <= 0 || e > Rat(1, 10)) throw UsageError("--eps must lie in (0, 1/10]");
    return e;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    f << text;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) o += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return o + "\"";
}

std::string render_records(const std::vector<CheckRecord>& rs, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        json a = json::array();
        for (const auto& r : rs) a.push_back(to_json(r));
        os << a.dump(2) << "\n";
    } else if (format == "csv") {
        os << "id,anchor,status,wall_time_ms\n";
        for (const auto& r : rs)
            os << csv_field(r.id) << "," << csv_field(r.anchor) << "," << (r.verified ? "verified" : "failed") << ","
               << r.wall_time_ms << "\n";
    } else {
        std::size_t ok = 0;
        for (const auto& r : rs) {
            ok += r.verified;
            os << (r.verified ? "verified  " : "FAILED    ") << r.id << "  (" << r.anchor << ")\n";
        }
        os << ok << "/" << rs.size() << " verified\n";
    }
    return os.str();
}

std::vector<QuadExt> parse_vec(const std::string& s, std::size_t n) {
    std::vector<QuadExt> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(QuadExt::parse(item));
    if (v.size() != n) throw UsageError("expected " + std::to_string(n) + " comma-separated entries, got " + std::to_string(v.size()));
    return v;
}

std::string join(const std::vector<QuadExt>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(15);
    os << x;
    return os.str();
}

int cmd_verify(const std::string& target, const std::string& eps_text, bool eps_given, const std::string& out,
               const std::string& format) {
    static const std::set<std::string> targets = {"all", "coass", "cayley", "appendix", "locus", "identities"};
    if (!targets.count(target)) throw UsageError("unknown verify target '" + target + "'");
    Rat eps = parse_eps(eps_text);
    std::vector<CheckRecord> rs;
    std::set<std::string> seen;
    auto add = [&](std::vector<CheckRecord> v, const std::string& suffix = "") {
        for (auto& r : v) {
            r.id += suffix;
            if (seen.insert(r.id).second) rs.push_back(std::move(r));
        }
    };
    if (target == "all" || target == "coass") {
        add(run_thm_coass(eps));
        // Without an explicit --eps the coassociative proof is also run at 1/100.
        if (!eps_given) add(run_thm_coass(Rat(1, 100)), "@1/100");
    }
    if (target == "all" || target == "cayley") add(run_thm_cayley(eps));
    if (target == "appendix") add(run_appendix_claim());
    if (target == "all" || target == "locus") add(run_locus_lemmas());
    if (target == "all" || target == "identities") add(run_identities());
    write_out(out, render_records(rs, format));
    return all_verified(rs) ? 0 : 1;
}

int cmd_cert(const std::string& poly, const std::string& a, const std::string& b, int degree,
             const std::string& basis_text, const std::string& corpus, const std::string& out,
             const std::string& format) {
    Basis basis;
    try {
        basis = parse_basis(basis_text);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (!corpus.empty()) {
        std::string text;
        if (corpus == "builtin") {
            text = builtin_corpus();
        } else {
            std::ifstream f(corpus);
            if (!f) throw UsageError("cannot open corpus " + corpus);
            std::stringstream ss;
            ss << f.rdbuf();
            text = ss.str();
        }
        json rep = json::array();
        bool all = true;
        for (const auto& e : parse_corpus(text)) {
            json j = run_corpus_entry(e);
            all = all && j["verified"].get<bool>();
            rep.push_back(j);
        }
        std::ostringstream os;
        if (format == "json") {
            os << rep.dump(2) << "\n";
        } else {
            os << "id,degree_claimed,degree_found,verdict,margin_min_coeff\n";
            for (const auto& j : rep)
                os << csv_field(j["id"]) << "," << j["degree_claimed"] << ","
                   << (j["degree_found"].is_null() ? "" : j["degree_found"].dump()) << "," << j["verdict"].get<std::string>()
                   << "," << csv_field(j["margin_min_coeff"]) << "\n";
        }
        write_out(out, os.str());
        return all ? 0 : 1;
    }
    if (poly.empty() || a.empty() || b.empty()) throw UsageError("cert needs POLY A B or --corpus");
    MPoly p = MPoly::parse(poly);
    QuadExt qa = QuadExt::parse(a), qb = QuadExt::parse(b);
    if (!(qa < qb)) throw UsageError("cert needs a < b");
    BernCert c;
    bool certified;
    if (degree >= 0) {
        c = bern_expand(p, qa, qb, static_cast<unsigned>(degree), basis);
        certified = c.verdict != Verdict::inconclusive;
    } else {
        auto r = bern_certify(p, qa, qb, 64, basis);
        c = r.cert;
        certified = r.certified;
    }
    json j = {{"polynomial", p.str()}, {"interval", {qa.str(), qb.str()}}, {"degree", c.m},
              {"basis", to_string(c.basis)}, {"verdict", to_string(c.verdict)}};
    json co = json::array();
    for (const auto& x : c.coeffs) co.push_back(x.str());
    j["coefficients"] = co;
    if (!certified) {
        int k = c.last_negative();
        if (k >= 0) j["negative_coefficient"] = {{"index", k}, {"value", c.coeffs[static_cast<std::size_t>(k)].str()}};
        // Locate a sign change of p when the endpoints already disagree or a root is inside.
        std::string v = main_variable(p);
        QuadExt pa = p.eval({{v, qa}}), pb = p.eval({{v, qb}});
        if (pa.sign() * pb.sign() < 0) j["sign_change"] = {{"value_at_a", pa.str()}, {"value_at_b", pb.str()}};
        else if (pa.sign() <= 0 || pb.sign() <= 0) j["nonpositive_endpoint"] = {{"value_at_a", pa.str()}, {"value_at_b", pb.str()}};
    }
    std::ostringstream os;
    if (format == "json") {
        os << j.dump(2) << "\n";
    } else {
        os << "degree " << c.m << " (" << to_string(c.basis) << ") on [" << qa.str() << ", " << qb.str()
           << "]: " << to_string(c.verdict) << "\n";
        os << "d = (";
        for (std::size_t i = 0; i < c.coeffs.size(); ++i) os << (i ? ", " : "") << c.coeffs[i].str();
        os << ")\n";
        if (j.contains("negative_coefficient"))
            os << "negative coefficient at index " << j["negative_coefficient"]["index"] << "\n";
        if (j.contains("sign_change"))
            os << "sign change: p(a) = " << j["sign_change"]["value_at_a"].get<std::string>()
               << ", p(b) = " << j["sign_change"]["value_at_b"].get<std::string>() << "\n";
    }
    write_out(out, os.str());
    return c.verdict == Verdict::positive ? 0 : 1;
}

int cmd_region(int figure, const std::string& eps_text, int resolution, const std::string& out,
               const std::string& format) {
    if (figure < 1 || figure > 3) throw UsageError("--figure must be 1, 2 or 3");
    if (resolution < 2 || resolution > 4096) throw UsageError("--resolution must lie in [2, 4096]");
    auto pts = region_curves({figure, parse_eps(eps_text), resolution});
    if (format == "json") {
        json a = json::array();
        for (const auto& p : pts)
            a.push_back({{"figure", p.figure}, {"curve_id", p.curve_id}, {"lambda1", p.l1}, {"lambda2", p.l2}});
        write_out(out, a.dump() + "\n");
    } else {
        write_out(out, region_csv(pts));
    }
    return 0;
}

int cmd_tools(const std::string& sub, const std::vector<std::string>& args, const std::string& lo,
              const std::string& matrix) {
    if (sub == "cross" || sub == "assoc" || sub == "triple") {
        std::size_t need = sub == "cross" ? 2 : 3, dim = sub == "triple" ? 8 : 7;
        if (args.size() != need) throw UsageError(sub + " takes " + std::to_string(need) + " vectors");
        std::vector<Vec<QuadExt>> v;
        for (const auto& a : args) v.push_back(parse_vec(a, dim));
        Vec<QuadExt> r = sub == "cross" ? cross7(v[0], v[1])
                         : sub == "assoc" ? associator(v[0], v[1], v[2])
                                          : triple_cross8(v[0], v[1], v[2]);
        std::cout << join(r) << "\n";
        return 0;
    }
    if (sub != "normalform") throw UsageError("unknown tools command '" + sub + "'");
    if (!lo.empty() == !matrix.empty()) throw UsageError("normalform needs exactly one of --lo or --matrix");
    auto print = [](const std::string& comp, const std::vector<double>& l, double locus, double sym) {
        std::cout << "component " << comp << "\nlambda";
        for (double x : l) std::cout << " " << fmt(x);
        std::cout << "\nmagnitudes";
        for (double x : l) std::cout << " " << fmt(std::fabs(x));
        std::cout << "\nlocus_residual " << fmt(locus) << "\nsymmetry_residual " << fmt(sym) << "\n";
    };
    if (!lo.empty()) {
        auto x = parse_vec(lo, 4);
        std::vector<double> xd;
        for (const auto& q : x) xd.push_back(q.to_double());
        auto nf = coass_normal_form(lawson_osserman(xd).jac);
        print(to_string(nf.component), {nf.lambda.begin(), nf.lambda.end()}, nf.locus_residual, nf.symmetry_residual);
        return 0;
    }
    std::vector<double> e;
    std::stringstream ss(matrix);
    std::string item;
    while (std::getline(ss, item, ',')) e.push_back(QuadExt::parse(item).to_double());
    auto shape = [&](std::size_t r, std::size_t c) {
        Mat m(r, std::vector<double>(c));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m[i][j] = e[i * c + j];
        return m;
    };
    if (e.size() == 12) {
        auto nf = coass_normal_form(shape(3, 4));
        print(to_string(nf.component), {nf.lambda.begin(), nf.lambda.end()}, nf.locus_residual, nf.symmetry_residual);
    } else if (e.size() == 9) {
        auto nf = associative_normal_form(shape(3, 3));
        print(to_string(nf.component), {nf.lambda.begin(), nf.lambda.end()}, nf.locus_residual, nf.symmetry_residual);
    } else if (e.size() == 16) {
        auto nf = cayley_normal_form(shape(4, 4));
        print(to_string(nf.component), {nf.lambda.begin(), nf.lambda.end()}, nf.locus_residual, nf.symmetry_residual);
    } else {
        throw UsageError("--matrix needs 9, 12 or 16 entries");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certificates for calibrated graphs"};
    app.require_subcommand(1);
    std::string eps = "1/10", out, format = "text";
    int resolution = 400;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--out", out, "output path (stdout when omitted)");
        c->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    };

    std::string target;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("target", target, "all, coass, cayley, appendix, locus or identities")->required();
    auto* eps_opt = verify->add_option("--eps", eps, "epsilon in (0, 1/10]");
    verify->add_option("--resolution", resolution, "unused by verify");
    add_common(verify);

    std::string poly, a, b, basis = "scaled", corpus;
    int degree = -1;
    auto* cert = app.add_subcommand("cert", "Bernstein certificate of a polynomial on [a, b]");
    cert->add_option("poly", poly);
    cert->add_option("a", a);
    cert->add_option("b", b);
    cert->add_option("--degree", degree, "fixed degree; minimal-degree search when omitted")
        ->check(CLI::Range(0, 4096));
    cert->add_option("--basis", basis, "scaled or binomial");
    cert->add_option("--corpus", corpus, "corpus file, or 'builtin'");
    add_common(cert);

    int figure = 1;
    auto* region = app.add_subcommand("region", "curve points for figures 1-3");
    region->add_option("--figure", figure)->required();
    region->add_option("--eps", eps, "epsilon in (0, 1/10]");
    region->add_option("--resolution", resolution, "grid size, at most 4096");
    add_common(region);

    std::string sub, lo, matrix;
    std::vector<std::string> targs;
    auto* tools = app.add_subcommand("tools", "octonionic products and normal forms");
    tools->add_option("command", sub, "cross, assoc, triple or normalform")->required();
    tools->add_option("vectors", targs, "comma-separated vectors");
    tools->add_option("--lo", lo, "point of R^4 for the Lawson-Osserman cone");
    tools->add_option("--matrix", matrix, "row-major 3x4, 3x3 or 4x4 matrix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        if (*verify) return cmd_verify(target, eps, eps_opt->count() > 0, out, format);
        if (*cert) return cmd_cert(poly, a, b, degree, basis, corpus, out, format);
        if (*region) return cmd_region(figure, eps, resolution, out, format == "text" ? "csv" : format);
        if (*tools) return cmd_tools(sub, targs, lo, matrix);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
