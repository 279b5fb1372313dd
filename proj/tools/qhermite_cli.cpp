// Command-line front end: polynomial family tables, continued-fraction
// moments, Hankel determinants, the matching oracle and the verification
// suite, with machine-readable output for CI.
//
// Exit codes: 0 success / all identities pass, 1 verification failure,
// 2 usage error (including requests above the enumeration cap).

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhermite.hpp"

using namespace qhermite;

namespace {

struct FamilyDef {
    std::string name;
    std::function<FamilyTable(int)> build;
};

const std::vector<FamilyDef>& family_registry() {
    static const std::vector<FamilyDef> reg = {
        {"hermite_classical", [](int n) { return hermite_classical(n); }},
        {"cont_qhermite", [](int n) { return cont_qhermite(n); }},
        {"disc_qhermite_I", [](int n) { return disc_qhermite_I(n); }},
        {"disc_qhermite_II_rescaled", [](int n) { return disc_qhermite_II_rescaled(n); }},
        {"new_qhermite", [](int n) { return new_qhermite(n); }},
        {"t_family", [](int n) { return t_family(n); }},
        {"lucas_classical", [](int n) { return lucas_classical(n); }},
        {"fib_classical", [](int n) { return fib_classical(n); }},
        {"qlucas", [](int n) { return qlucas(n); }},
        {"qfib", [](int n) { return qfib(n); }},
        {"chebyshev_T", [](int n) { return chebyshev_T(n); }},
        {"r_family", [](int n) { return r_family(n); }},
        {"h_wn",
         [](int n) {
             FamilyTable t{"h_wn", {}};
             for (int i = 0; i <= n; ++i) t.entries.push_back(h_wn(i));
             return t;
         }},
    };
    return reg;
}

struct SpecDef {
    std::string name;
    std::function<JSpec(int)> build;  // m parameter used by "w" only
};

const std::vector<SpecDef>& spec_registry() {
    static const std::vector<SpecDef> reg = {
        {"newH", [](int) { return jspec_newH(); }},
        {"contH", [](int) { return jspec_contH(); }},
        {"h", [](int) { return jspec_h(); }},
        {"T", [](int) { return jspec_T(); }},
        {"w", [](int m) { return jspec_w(m); }},
        {"classical", [](int) { return jspec_classical(); }},
        {"crossing", [](int) { return jspec_crossing(); }},
    };
    return reg;
}

template <typename Reg>
std::string registry_names(const Reg& reg) {
    std::string out;
    for (const auto& e : reg) {
        if (!out.empty()) out += ", ";
        out += e.name;
    }
    return out;
}

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return 0;
    }
    std::ofstream f(out_path);
    if (!f) return usage_error("cannot open output file: " + out_path);
    f << text;
    return 0;
}

std::string family_latex_name(const std::string& family, int n) {
    return family + "_{" + std::to_string(n) + "}";
}

int run_table(const std::string& family, int n, const std::string& format, const std::string& out) {
    const FamilyDef* def = nullptr;
    for (const auto& e : family_registry())
        if (e.name == family) def = &e;
    if (!def)
        return usage_error("unknown family '" + family + "'; valid names: " +
                           registry_names(family_registry()));
    FamilyTable t = def->build(n);
    std::ostringstream os;
    if (format == "json") {
        os << to_json(t).dump(2) << "\n";
    } else if (format == "csv") {
        os << "n,polynomial\n";
        for (int i = 0; i < t.size(); ++i) os << i << ",\"" << t.at(i).to_string() << "\"\n";
    } else if (format == "latex") {
        for (int i = 0; i < t.size(); ++i)
            os << family_latex_name(family, i) << " &= " << latex(t.at(i)) << " \\\\\n";
    } else if (format == "text") {
        for (int i = 0; i < t.size(); ++i) os << i << ": " << t.at(i).to_string() << "\n";
    } else {
        return usage_error("unknown format '" + format + "'");
    }
    return write_output(os.str(), out);
}

int run_cf(const std::string& spec, int m, int max_n, bool scoeffs, const std::string& format,
           const std::string& out) {
    const SpecDef* def = nullptr;
    for (const auto& e : spec_registry())
        if (e.name == spec) def = &e;
    if (!def)
        return usage_error("unknown spec '" + spec + "'; valid names: " +
                           registry_names(spec_registry()));
    JSpec j = def->build(m);
    auto mu = moments(j, max_n);
    std::ostringstream os;
    if (format == "json") {
        Json doc{{"spec", spec}, {"max_n", max_n}};
        if (spec == "w") doc["m"] = m;
        Json arr = Json::array();
        for (const auto& v : mu) arr.push_back(to_json(v));
        doc["moments"] = std::move(arr);
        if (scoeffs) {
            auto cs = sfraction_from_series(mu, max_n);
            Json carr = Json::array();
            for (const auto& c : cs)
                carr.push_back(Json{{"num", to_json(c.num())}, {"den", to_json(c.den_product())}});
            doc["s_coefficients"] = std::move(carr);
        }
        os << doc.dump(2) << "\n";
    } else if (format == "text") {
        for (int n = 0; n <= max_n; ++n)
            os << "mu_" << n << " = " << mu[static_cast<size_t>(n)].to_string() << "\n";
        if (scoeffs) {
            auto cs = sfraction_from_series(mu, max_n);
            for (size_t i = 0; i < cs.size(); ++i)
                os << "c_" << (i + 1) << " = " << cs[i].to_string() << "\n";
        }
    } else {
        return usage_error("unknown format '" + format + "' (cf supports text, json)");
    }
    return write_output(os.str(), out);
}

int run_hankel(const std::string& spec, int m, int n, int shift, const std::string& format,
               const std::string& out) {
    const SpecDef* def = nullptr;
    for (const auto& e : spec_registry())
        if (e.name == spec) def = &e;
    if (!def)
        return usage_error("unknown spec '" + spec + "'; valid names: " +
                           registry_names(spec_registry()));
    JSpec j = def->build(m);
    auto mu = moments(j, std::max(2 * n, 1));
    XSPoly d0 = hankel_det(mu, n, 0);
    XSPoly d1 = hankel_det(mu, n, 1);
    XSPoly lam_product(1);
    for (int i = 1; i <= n - 1; ++i)
        for (int k = 1; k <= i; ++k) lam_product *= j.lam.at(k);
    XSPoly p0 = pn_at_zero(j, n);
    XSPoly shifted_expected = n % 2 == 0 ? d0 * p0 : -(d0 * p0);
    XSPoly residual0 = d0 - lam_product;
    XSPoly residual1 = d1 - shifted_expected;
    std::ostringstream os;
    if (format == "json") {
        Json doc{{"spec", spec}, {"n", n}};
        if (spec == "w") doc["m"] = m;
        if (shift != 1) doc["d0"] = to_json(d0);
        if (shift != 0) doc["d1"] = to_json(d1);
        doc["product_residual"] = to_json(residual0);
        doc["shifted_residual"] = to_json(residual1);
        os << doc.dump(2) << "\n";
    } else if (format == "text") {
        if (shift != 1) os << "d(" << n << ",0) = " << d0.to_string() << "\n";
        if (shift != 0) os << "d(" << n << ",1) = " << d1.to_string() << "\n";
        os << "product residual = " << residual0.to_string() << "\n";
        os << "shifted residual = " << residual1.to_string() << "\n";
    } else {
        return usage_error("unknown format '" + format + "' (hankel supports text, json)");
    }
    return write_output(os.str(), out);
}

int run_oracle(int n, int k, bool has_k, const std::string& format, const std::string& out) {
    std::map<int, QScalar> table;
    try {
        table = c_table(n);
    } catch (const CapExceededError& e) {
        return usage_error(e.what());
    }
    auto coeff_array = [](const QScalar& v) {
        Json arr = Json::array();
        for (int i = 0; i <= v.num().degree(); ++i) arr.push_back(to_json(v.num().coeff(i)));
        return arr;
    };
    std::ostringstream os;
    if (format == "json") {
        if (has_k) {
            QScalar v = table.count(k) ? table.at(k) : QScalar(0);
            os << Json{{"c", coeff_array(v)}}.dump() << "\n";
        } else {
            Json tab = Json::object();
            for (const auto& [kk, v] : table) tab[std::to_string(kk)] = coeff_array(v);
            os << Json{{"n", n}, {"table", std::move(tab)}}.dump(2) << "\n";
        }
    } else if (format == "csv") {
        os << "k,c\n";
        for (const auto& [kk, v] : table) {
            if (has_k && kk != k) continue;
            os << kk << ",\"" << v.to_string() << "\"\n";
        }
    } else if (format == "text") {
        for (const auto& [kk, v] : table) {
            if (has_k && kk != k) continue;
            os << "c(" << n << "," << kk << ",q) = " << v.to_string() << "\n";
        }
    } else {
        return usage_error("unknown format '" + format + "' (oracle supports text, json, csv)");
    }
    return write_output(os.str(), out);
}

int run_verify(bool all, const std::string& identity, int max_n, int trials, std::uint64_t seed,
               const std::string& format, const std::string& out) {
    VerifyOptions opt;
    opt.max_n = max_n;
    opt.trials = trials;
    opt.seed = seed;
    std::vector<VerifyReport> reports;
    if (!identity.empty()) {
        const IdentityEntry* entry = nullptr;
        for (const auto& e : identity_registry())
            if (e.name == identity) entry = &e;
        if (!entry) {
            std::string names;
            for (const auto& e : identity_registry()) names += (names.empty() ? "" : ", ") + e.name;
            return usage_error("unknown identity '" + identity + "'; valid names: " + names);
        }
        reports.push_back(entry->run(opt));
    } else if (all) {
        reports = verify_all(opt);
    } else {
        return usage_error("verify needs --all or --identity NAME");
    }
    bool ok = true;
    std::ostringstream os;
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& r : reports) {
            arr.push_back(to_json(r));
            ok = ok && r.pass;
        }
        os << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            ok = ok && r.pass;
            os << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.range << ")";
            if (r.witness)
                os << "  witness: n=" << r.witness->n << " k=" << r.witness->k
                   << " lhs=" << r.witness->lhs << " rhs=" << r.witness->rhs;
            os << "\n";
        }
    }
    int wr = write_output(os.str(), out);
    if (wr != 0) return wr;
    return ok ? 0 : 1;
}

int run_export(int max_n, const std::string& out) {
    if (out.empty()) return usage_error("export needs --out PATH");
    Json doc;
    Json fams = Json::object();
    for (const auto& e : family_registry()) fams[e.name] = to_json(e.build(max_n));
    doc["families"] = std::move(fams);
    Json specs = Json::object();
    for (const auto& e : spec_registry()) {
        Json entry = Json::object();
        Json arr = Json::array();
        for (const auto& v : moments(e.build(0), max_n)) arr.push_back(to_json(v));
        entry["moments"] = std::move(arr);
        if (e.name == "w") entry["m"] = 0;
        specs[e.name] = std::move(entry);
    }
    doc["specs"] = std::move(specs);
    Json ids = Json::array();
    for (const auto& e : identity_registry()) ids.push_back(e.name);
    doc["identities"] = std::move(ids);
    return write_output(doc.dump(2) + "\n", out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-Hermite polynomial toolkit"};
    app.require_subcommand(1);

    std::string family, spec = "newH", identity, format = "text", out;
    int n = 8, k = 0, m = 0, shift = -1, max_n = 0, trials = 20;
    std::uint64_t seed = 20260810;
    bool all = false, scoeffs = false;

    auto* tcmd = app.add_subcommand("table", "Emit a polynomial family table");
    tcmd->add_option("--family", family, "family name")->required();
    tcmd->add_option("--n", n, "largest index");
    tcmd->add_option("--format", format, "text|json|csv|latex");
    tcmd->add_option("--out", out, "output path (default stdout)");

    auto* ccmd = app.add_subcommand("cf", "Moments (and S-coefficients) of a named sequence");
    ccmd->add_option("--spec", spec, "coefficient sequence name")->required();
    ccmd->add_option("--m", m, "parameter for the w spec");
    ccmd->add_option("--max-n", n, "largest moment index");
    ccmd->add_flag("--scoeffs", scoeffs, "also extract S-fraction coefficients");
    ccmd->add_option("--format", format, "text|json");
    ccmd->add_option("--out", out, "output path");

    auto* hcmd = app.add_subcommand("hankel", "Hankel determinants and residuals");
    hcmd->add_option("--spec", spec, "coefficient sequence name")->required();
    hcmd->add_option("--m", m, "parameter for the w spec");
    hcmd->add_option("--n", n, "determinant size");
    hcmd->add_option("--shift", shift, "restrict to shift 0 or 1");
    hcmd->add_option("--format", format, "text|json");
    hcmd->add_option("--out", out, "output path");

    auto* ocmd = app.add_subcommand("oracle", "Brute-force c(n,k,q) tables");
    ocmd->add_option("--n", n, "ground-set size (capped at 14)")->required();
    auto* kopt = ocmd->add_option("--k", k, "number of unmatched vertices");
    ocmd->add_option("--format", format, "text|json|csv");
    ocmd->add_option("--out", out, "output path");

    auto* vcmd = app.add_subcommand("verify", "Run identity verifications");
    vcmd->add_flag("--all", all, "run every identity");
    vcmd->add_option("--identity", identity, "run a single identity by name");
    vcmd->add_option("--max-n", max_n, "override the per-identity default range");
    vcmd->add_option("--trials", trials, "points per degree for the numeric identity");
    vcmd->add_option("--seed", seed, "PRNG seed for the numeric identity");
    vcmd->add_option("--format", format, "text|json");
    vcmd->add_option("--out", out, "output path");

    auto* ecmd = app.add_subcommand("export", "Dump families, moments and identity names as JSON");
    ecmd->add_option("--max-n", n, "table size");
    ecmd->add_option("--out", out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (tcmd->parsed()) return run_table(family, n, format, out);
        if (ccmd->parsed()) return run_cf(spec, m, n, scoeffs, format, out);
        if (hcmd->parsed()) return run_hankel(spec, m, n, shift, format, out);
        if (ocmd->parsed()) return run_oracle(n, k, kopt->count() > 0, format, out);
        if (vcmd->parsed()) return run_verify(all, identity, max_n, trials, seed, format, out);
        if (ecmd->parsed()) return run_export(n, out);
    } catch (const CapExceededError& e) {
        return usage_error(e.what());
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
