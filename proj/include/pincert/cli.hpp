#pragma once

/*
 * Command-line front end. run() is a pure function from argv to
 * (exit code, output text), so the whole surface is testable in-process and
 * main() only forwards. Subcommands cover the lemma certificates, raw
 * elimination and root counting, the sampling oracle, the negativity
 * certificate at a chosen parameter point, and the eta search.
 *
 * Every subcommand takes --json. JSON payloads reuse the certificate
 * schema (the computational subcommands wrap their result in a
 * single-obligation certificate), so whatever mode is chosen, the same
 * pass/fail verdict is reported and the JSON re-parses to the Certificate
 * the text table summarizes.
 *
 * Exit codes: 0 pass, 1 a certificate failed or the oracle saw violations,
 * 2 usage or parse errors.
 */

#include <pincert/certificate.hpp>
#include <pincert/elimination.hpp>
#include <pincert/lemmas.hpp>
#include <pincert/multipoly.hpp>
#include <pincert/pinching.hpp>
#include <pincert/poly_io.hpp>
#include <pincert/rational.hpp>
#include <pincert/realroots.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace pincert::cli {

struct RunResult {
    int exit_code = 0;
    std::string output;
};

namespace detail {

inline std::string status(bool b) { return b ? "pass" : "fail"; }

inline std::string cert_text(const Certificate& c) {
    std::string out = "certificate: " + c.name + "\n";
    for (const Obligation& o : c.obligations)
        out += "  [" + status(o.pass) + "] " + o.desc + " (" + o.anchor + ")\n";
    out += "overall: " + status(c.overall()) + "\n";
    return out;
}

inline std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

inline Certificate wrap(std::string name, Obligation o) {
    Certificate c;
    c.name = std::move(name);
    c.obligations.push_back(std::move(o));
    return c;
}

inline RunResult do_certify(const std::string& lemma, bool all, bool json) {
    std::vector<Certificate> certs;
    if (all)
        certs = lemmas::certify_all();
    else
        certs.push_back(lemmas::certify_lemma(lemma));
    bool ok = true;
    for (const Certificate& c : certs) ok = ok && c.overall();
    if (json) {
        if (!all) return {ok ? 0 : 1, dump(to_json(certs.front()))};
        ojson arr = ojson::array();
        for (const Certificate& c : certs) arr.push_back(to_json(c));
        return {ok ? 0 : 1, dump(arr)};
    }
    std::string out;
    for (const Certificate& c : certs) {
        if (!out.empty()) out += "\n";
        out += cert_text(c);
    }
    return {ok ? 0 : 1, out};
}

inline RunResult do_resultant(const std::string& var, const std::string& p_text,
                              const std::string& q_text, bool json) {
    VarTable t;
    MultiPoly p = parse_poly_grow(p_text, t);
    MultiPoly q = parse_poly_grow(q_text, t);
    parse_poly_grow(var, t);  // the eliminated variable may be absent from either input
    p = p.retable(t);
    q = q.retable(t);
    ElimResult r = resultant(p, q, var);
    std::string text = to_string(r.value);
    if (!json) return {0, text + "\n"};
    Obligation o{"resultant computed", ObKind::resultant_match, true, "cli:resultant", {}};
    o.add_data("var", var);
    o.add_data("p", to_string(p));
    o.add_data("q", to_string(q));
    o.add_data("resultant", text);
    return {0, dump(to_json(wrap("resultant", std::move(o))))};
}

inline RunResult do_disc(const std::string& var, const std::string& p_text, bool json) {
    VarTable t;
    MultiPoly p = parse_poly_grow(p_text, t);
    parse_poly_grow(var, t);
    p = p.retable(t);
    ElimResult r = discriminant(p, var);
    std::string text = to_string(r.value);
    if (!json) return {0, text + "\n"};
    Obligation o{"discriminant computed", ObKind::discriminant_match, true, "cli:disc", {}};
    o.add_data("var", var);
    o.add_data("p", to_string(p));
    o.add_data("discriminant", text);
    return {0, dump(to_json(wrap("disc", std::move(o))))};
}

inline RunResult do_sturm(const std::string& p_text, const std::string& dom_text,
                          bool json) {
    VarTable t;
    MultiPoly p = parse_poly_grow(p_text, t);
    if (p.is_zero()) return {2, "error: the zero polynomial has no root count\n"};
    if (t.arity() > 1)
        return {2, "error: sturm needs a univariate polynomial\n"};
    DomainSpec dom = DomainSpec::parse(dom_text);
    int count = t.arity() == 1 ? count_real_roots(p, t.name(0), dom) : 0;
    if (!json) return {0, std::to_string(count) + "\n"};
    Obligation o{"distinct real roots counted", ObKind::root_count, true, "cli:sturm", {}};
    o.add_data("p", to_string(p));
    o.add_data("domain", dom.str());
    o.add_data("count", std::to_string(count));
    return {0, dump(to_json(wrap("sturm", std::move(o))))};
}

inline RunResult do_oracle(int n, const std::string& eta_text, long trials,
                           std::uint64_t seed, bool json) {
    lemmas::OracleReport r =
        lemmas::sample_spectra(n, Rational::parse(eta_text), trials, seed);
    bool ok = r.violations == 0;
    Obligation o{"sampled spectra stay within the cube-root bound",
                 ObKind::numeric_margin, ok, "oracle:samples", {}};
    o.add_data("n", std::to_string(r.n));
    o.add_data("eta", r.eta.str());
    o.add_data("trials", std::to_string(r.trials));
    o.add_data("discarded", std::to_string(r.discarded));
    o.add_data("violations", std::to_string(r.violations));
    o.add_data("min_margin", r.margin_valid ? r.min_margin.str() : "n/a");
    o.add_data("s_lo", r.s_lo.str());
    o.add_data("s_hi", r.s_hi.str());
    o.add_data("seed", std::to_string(r.seed));
    Certificate c = wrap("oracle", std::move(o));
    if (json) return {ok ? 0 : 1, dump(to_json(c))};
    std::string out;
    for (const auto& [k, v] : c.obligations.front().data) out += k + " = " + v + "\n";
    out += "overall: " + status(ok) + "\n";
    return {ok ? 0 : 1, out};
}

inline RunResult do_pinch(const std::string& eps, const std::string& sigma,
                          const std::string& kappa, const std::string& eta,
                          long n_value, bool have_n, bool json) {
    pinching::PinchingParams p{Rational::parse(eps), Rational::parse(sigma),
                               Rational::parse(kappa), Rational::parse(eta)};
    pinching::NegativityCert nc = pinching::certify_negative(p);
    pinching::DerivedConstants d = pinching::derived_constants(p);
    Certificate c = to_certificate(nc);
    if (have_n) {
        if (n_value < 6) return {2, "error: --n must be at least 6\n"};
        Rational nv(n_value);
        Rational tv = d.theta.evaluate(nv);
        Rational sv = nc.coef_sn.evaluate(nv);
        Rational cv = nc.coef_const.evaluate(nv);
        Obligation ev{"signs hold at n = " + std::to_string(n_value),
                      ObKind::numeric_margin,
                      tv.sign() >= 0 && sv.sign() < 0 && cv.sign() < 0,
                      "pinch:at-n", {}};
        ev.add_data("n", std::to_string(n_value));
        ev.add_data("theta", tv.str());
        ev.add_data("coef_sn", sv.str());
        ev.add_data("coef_const", cv.str());
        c.obligations.push_back(std::move(ev));
    }
    bool ok = c.overall();
    if (json) return {ok ? 0 : 1, dump(to_json(c))};
    std::string out;
    out += "theta = " + d.theta.str() + "\n";
    out += "coef_sn = " + nc.coef_sn.str() + "\n";
    out += "coef_const = " + nc.coef_const.str() + "\n";
    if (have_n) {
        Rational nv(n_value);
        out += "at n = " + std::to_string(n_value) + ": theta = " +
               d.theta.evaluate(nv).str() + ", coef_sn = " +
               nc.coef_sn.evaluate(nv).str() + ", coef_const = " +
               nc.coef_const.evaluate(nv).str() + "\n";
    }
    out += cert_text(c);
    return {ok ? 0 : 1, out};
}

inline RunResult do_optimize(const std::string& path, bool json) {
    std::ifstream in(path);
    if (!in) return {2, "error: cannot read config file '" + path + "'\n"};
    ojson j;
    try {
        j = ojson::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    }
    pinching::SearchConfig cfg = pinching::SearchConfig::from_json(j);
    pinching::OptimizeResult res = pinching::optimize_eta(6, cfg);
    if (json) return {res.feasible ? 0 : 1, dump(pinching::to_json(res))};
    std::string out = "message = " + res.message + "\n";
    if (res.feasible) {
        out += "best_eta = " + res.best_eta.str() + "\n";
        out += "width = " + (Rational(6L) / res.best_eta).str() + "\n";
        out += "eps = " + res.params.eps.str() + "\n";
        out += "sigma = " + res.params.sig.str() + "\n";
        out += "kappa = " + res.params.kap.str() + "\n";
        out += "exact_checks = " + std::to_string(res.exact_checks) + "\n";
        out += "trail:\n";
        for (const auto& [eta, width] : res.trail)
            out += "  eta " + eta.str() + "  width " + width.str() + "\n";
        out += cert_text(to_certificate(res.cert));
    }
    return {res.feasible ? 0 : 1, out};
}

}  // namespace detail

inline RunResult run(const std::vector<std::string>& args) {
    CLI::App app{"exact certificates for a pinching estimate on minimal hypersurfaces"};
    app.name("pincert");
    app.require_subcommand(0, 1);

    std::string lemma;
    bool all = false, json = false;
    CLI::App* certify = app.add_subcommand("certify", "run lemma certificates");
    CLI::Option* lemma_opt =
        certify->add_option("--lemma", lemma, "one of the four lemma names")
            ->check(CLI::IsMember(lemmas::lemma_names()));
    CLI::Option* all_opt =
        certify->add_flag("--all", all, "run every lemma in dependency order");
    lemma_opt->excludes(all_opt);
    certify->add_flag("--json", json, "emit the certificate as JSON");

    std::string var, p_text, q_text;
    CLI::App* res_cmd = app.add_subcommand("resultant", "eliminate a variable from two polynomials");
    res_cmd->add_option("--var", var, "variable to eliminate")->required();
    res_cmd->add_option("--p", p_text, "first polynomial")->required();
    res_cmd->add_option("--q", q_text, "second polynomial")->required();
    res_cmd->add_flag("--json", json, "emit a certificate as JSON");

    CLI::App* disc_cmd = app.add_subcommand("disc", "discriminant in one variable");
    disc_cmd->add_option("--var", var, "variable of the discriminant")->required();
    disc_cmd->add_option("--p", p_text, "polynomial")->required();
    disc_cmd->add_flag("--json", json, "emit a certificate as JSON");

    std::string domain = "all";
    CLI::App* sturm_cmd = app.add_subcommand("sturm", "count distinct real roots");
    sturm_cmd->add_option("--p", p_text, "univariate polynomial")->required();
    sturm_cmd->add_option("--domain", domain, "\"a,b\", \"geq a\", \"leq b\" or \"all\"");
    sturm_cmd->add_flag("--json", json, "emit a certificate as JSON");

    int n = 0;
    std::string eta_text;
    long trials = 10000;
    std::uint64_t seed = 0;
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "sample spectra against the cube-root bound");
    oracle_cmd->add_option("--n", n, "dimension, at least 6")->required();
    oracle_cmd->add_option("--eta", eta_text, "pinching parameter")->required();
    oracle_cmd->add_option("--trials", trials, "number of accepted samples");
    oracle_cmd->add_option("--seed", seed, "RNG seed, echoed in output");
    oracle_cmd->add_flag("--json", json, "emit a certificate as JSON");

    std::string eps, sigma, kappa;
    long pinch_n = 0;
    bool n_symbolic = false;
    CLI::App* pinch_cmd = app.add_subcommand("pinch", "negativity certificate at a parameter point");
    pinch_cmd->add_option("--eps", eps, "epsilon")->required();
    pinch_cmd->add_option("--sigma", sigma, "sigma")->required();
    pinch_cmd->add_option("--kappa", kappa, "kappa")->required();
    pinch_cmd->add_option("--eta", eta_text, "eta")->required();
    CLI::Option* pinch_n_opt =
        pinch_cmd->add_option("--n", pinch_n, "also evaluate at this dimension");
    CLI::Option* symb_opt = pinch_cmd->add_flag(
        "--n-symbolic", n_symbolic, "report coefficients as rational functions of n (default)");
    pinch_n_opt->excludes(symb_opt);
    pinch_cmd->add_flag("--json", json, "emit the certificate as JSON");

    std::string config_path;
    CLI::App* opt_cmd = app.add_subcommand("optimize", "search for the smallest certified eta");
    opt_cmd->add_option("--config", config_path, "JSON search configuration")->required();
    opt_cmd->add_flag("--json", json, "emit the result as JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        int code = app.exit(e, out, err);
        return {code == 0 ? 0 : 2, out.str() + err.str()};
    }

    try {
        if (certify->parsed()) {
            if (!all && lemma.empty())
                return {2, "error: certify needs --lemma or --all\n"};
            return detail::do_certify(lemma, all, json);
        }
        if (res_cmd->parsed()) return detail::do_resultant(var, p_text, q_text, json);
        if (disc_cmd->parsed()) return detail::do_disc(var, p_text, json);
        if (sturm_cmd->parsed()) return detail::do_sturm(p_text, domain, json);
        if (oracle_cmd->parsed())
            return detail::do_oracle(n, eta_text, trials, seed, json);
        if (pinch_cmd->parsed())
            return detail::do_pinch(eps, sigma, kappa, eta_text, pinch_n,
                                    pinch_n_opt->count() > 0, json);
        if (opt_cmd->parsed()) return detail::do_optimize(config_path, json);
    } catch (const arithmetic_error& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    }
    return {2, app.help()};
}

inline RunResult run(int argc, char** argv) {
    return run(std::vector<std::string>(argv + 1, argv + argc));
}

}  // namespace pincert::cli
