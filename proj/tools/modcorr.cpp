#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "modcorr/cache.hpp"
#include "modcorr/errors.hpp"
#include "modcorr/eta.hpp"
#include "modcorr/groebner.hpp"
#include "modcorr/intersect.hpp"
#include "modcorr/modpoly.hpp"
#include "modcorr/quadforms.hpp"
#include "modcorr/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace modcorr;

struct RunConfig {
    std::string cache_dir;
    long guard = kDefaultGuard;
    unsigned threads = 1;
    std::string format = "json";
};

/* MODCORR_CACHE_DIR wins over --cache-dir, which wins over the
   platform default */
std::filesystem::path effective_cache_dir(const RunConfig& cfg) {
    if (const char* env = std::getenv("MODCORR_CACHE_DIR"); env && *env) return env;
    if (!cfg.cache_dir.empty()) return cfg.cache_dir;
    return default_cache_dir();
}

std::string rat_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

void emit(const RunConfig& cfg, const json& j, const std::vector<std::string>& text_lines) {
    if (cfg.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const std::string& line : text_lines) std::cout << line << "\n";
    }
}

std::string q_power(long e) {
    if (e == 0) return "1";
    if (e == 1) return "q";
    return "q^" + std::to_string(e);
}

int cmd_hauptmodul(long m, long order, const RunConfig& cfg) {
    Series t = hauptmodul_series(m, order);
    json coeffs = json::array();
    std::string expansion;
    for (long e = t.min_exp(); e <= order; ++e) {
        Int c = t.coeff(e);
        coeffs.push_back(json::array({e, c.get_str()}));
        if (c == 0) continue;
        Int a = abs(c);
        if (expansion.empty())
            expansion += (c < 0 ? "-" : "");
        else
            expansion += (c < 0 ? " - " : " + ");
        if (e == 0)
            expansion += a.get_str();
        else
            expansion += (a == 1 ? q_power(e) : a.get_str() + "*" + q_power(e));
    }
    emit(cfg, json{{"M", m}, {"coeffs", coeffs}},
         {"t(M=" + std::to_string(m) + ") = " + expansion + " + O(" + q_power(order + 1) + ")"});
    return 0;
}

int cmd_modpoly(long m, long n, const std::string& kind, const RunConfig& cfg) {
    PolyKind k = kind == "phi" ? PolyKind::phi : PolyKind::psi;
    std::filesystem::path dir = effective_cache_dir(cfg);
    bool hit = false;
    ModPoly p = cache_load_or_compute(dir, m, n, k, cfg.guard, cfg.threads, &hit);
    Int max_abs(0);
    for (const auto& [ij, c] : p.terms) max_abs = std::max(max_abs, Int(abs(c)));
    std::string file = cache_path(dir, m, n, k).string();

    std::vector<std::string> lines;
    if (hit) lines.push_back("cache hit");
    lines.push_back("file " + file);
    lines.push_back("degree " + std::to_string(p.degree_x()));
    lines.push_back("terms " + std::to_string(p.terms.size()));
    lines.push_back("max |coefficient| " + max_abs.get_str());
    emit(cfg,
         json{{"M", m},
              {"N", n},
              {"kind", kind},
              {"degree", p.degree_x()},
              {"terms", p.terms.size()},
              {"max_abs_coeff", max_abs.get_str()},
              {"file", file},
              {"cache_hit", hit}},
         lines);
    return 0;
}

int cmd_classnum(const std::string& kind, long long d, long long p, bool p_set,
                 const RunConfig& cfg) {
    bool needs_p = kind == "HM" || kind == "Ap" || kind == "chi";
    if (needs_p && !p_set) {
        std::cerr << "classnum --kind " << kind << " requires --p\n";
        return 1;
    }
    std::string value;
    if (kind == "h") value = rat_string(primitive_h(d));
    if (kind == "H") value = rat_string(hurwitz_H(d));
    if (kind == "HM") value = rat_string(HM_prime(p, d));
    if (kind == "Ap") value = rat_string(Ap(p, d));
    if (kind == "chi") value = std::to_string(chi(d, p));
    json j{{"kind", kind}, {"D", d}};
    if (needs_p) j["p"] = p;
    j["value"] = value;
    emit(cfg, j, {value});
    return 0;
}

int cmd_intersect(long long m, long long n1, long long n2, const std::string& method,
                  const RunConfig& cfg) {
    std::vector<std::pair<std::string, Int>> values;
    bool prime_m = is_small_prime(m);
    bool oracle_ok = m == 1 || (prime_m && hauptmodul_supported(m));
    if (method == "formula" || method == "all")
        values.emplace_back("formula", intersection_gamma0(m, n1, n2));
    if (method == "ap" || (method == "all" && prime_m))
        values.emplace_back("ap", intersection_gamma0_Ap(m, n1, n2));
    if (method == "eisenstein" || (method == "all" && prime_m))
        values.emplace_back("eisenstein", intersection_eisenstein(m, n1, n2));
    if (method == "oracle" || (method == "all" && oracle_ok))
        values.emplace_back("oracle", oracle_intersection(m, n1, n2, cfg.guard, cfg.threads));

    bool agree = true;
    for (const auto& [name, v] : values)
        if (v != values.front().second) agree = false;

    json vj = json::object();
    std::vector<std::string> lines;
    for (const auto& [name, v] : values) {
        vj[name] = v.get_str();
        lines.push_back(name + " " + v.get_str());
    }
    json j{{"M", m}, {"N1", n1}, {"N2", n2}, {"method", method}, {"values", vj}};
    if (method == "all") {
        j["agree"] = agree;
        lines.push_back(agree ? "agree" : "DISAGREE");
    }
    emit(cfg, j, lines);
    if (!agree) {
        std::cerr << "intersection routes disagree\n";
        return 3;
    }
    return 0;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg) {
    std::vector<VerifyReport> reps = run_suites(suite, cfg.guard, cfg.threads);
    bool all_ok = true;
    json ja = json::array();
    std::vector<std::string> lines;
    for (const VerifyReport& rep : reps) {
        all_ok = all_ok && rep.ok();
        json jc = json::array();
        char head[160];
        std::snprintf(head, sizeof head, "== %s %s (%.2fs)", rep.suite.c_str(),
                      rep.ok() ? "PASS" : "FAIL", rep.seconds());
        lines.push_back(head);
        for (const VerifyCheck& c : rep.checks) {
            jc.push_back(json{{"id", c.id},
                              {"pass", c.pass},
                              {"expected", c.expected},
                              {"actual", c.actual},
                              {"seconds", c.seconds}});
            char buf[512];
            if (c.pass)
                std::snprintf(buf, sizeof buf, "  [ok]   %-64s %6.2fs", c.id.c_str(), c.seconds);
            else
                std::snprintf(buf, sizeof buf, "  [FAIL] %-64s %6.2fs  expected: %s  actual: %s",
                              c.id.c_str(), c.seconds, c.expected.c_str(), c.actual.c_str());
            lines.push_back(buf);
        }
        ja.push_back(json{
            {"suite", rep.suite}, {"ok", rep.ok()}, {"seconds", rep.seconds()}, {"checks", jc}});
    }
    emit(cfg, ja, lines);
    return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact modular polynomials, class numbers, and intersection numbers "
                 "for genus-zero modular curves"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--cache-dir", cfg.cache_dir,
                   "modular-polynomial cache directory (MODCORR_CACHE_DIR overrides)");
    app.add_option("--guard", cfg.guard, "extra certified series coefficients beyond each pole")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, "worker threads for independent series rows")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    long hm_m = 0, hm_order = 0;
    CLI::App* hauptmodul = app.add_subcommand(
        "hauptmodul", "print the q-expansion of the eta-quotient generator t for X_0(M)");
    hauptmodul->fallthrough();
    hauptmodul->add_option("--M", hm_m, "level")->required();
    hauptmodul->add_option("--order", hm_order, "highest reported q-exponent")->required();

    long mp_m = 0, mp_n = 0;
    std::string mp_kind = "psi";
    CLI::App* modpoly = app.add_subcommand(
        "modpoly", "compute and cache the modular polynomial for level M, determinant N");
    modpoly->fallthrough();
    modpoly->add_option("--M", mp_m, "level")->required();
    modpoly->add_option("--N", mp_n, "determinant, coprime to M")->required();
    modpoly->add_option("--kind", mp_kind, "psi (primitive part) or phi (full product)")
        ->check(CLI::IsMember({"psi", "phi"}))
        ->capture_default_str();

    long long cn_d = 0, cn_p = 0;
    std::string cn_kind;
    CLI::App* classnum =
        app.add_subcommand("classnum", "class numbers of binary quadratic forms");
    classnum->fallthrough();
    classnum->add_option("--kind", cn_kind,
                         "h (primitive), H (Hurwitz), HM (level p), Ap (ratio), chi (character)")
        ->check(CLI::IsMember({"h", "H", "HM", "Ap", "chi"}))
        ->required();
    classnum->add_option("--D", cn_d, "form determinant")->required();
    CLI::Option* p_opt = classnum->add_option("--p", cn_p, "prime level");

    long long ix_m = 0, ix_n1 = 0, ix_n2 = 0;
    std::string ix_method = "all";
    CLI::App* intersect = app.add_subcommand(
        "intersect", "intersection number of the correspondences T_N1 and T_N2 on X_0(M)^2");
    intersect->fallthrough();
    intersect->add_option("--M", ix_m, "level")->required();
    intersect->add_option("--N1", ix_n1, "first determinant")->required();
    intersect->add_option("--N2", ix_n2, "second determinant")->required();
    intersect->add_option("--method", ix_method, "route, or all for cross-validation")
        ->check(CLI::IsMember({"formula", "ap", "eisenstein", "oracle", "all"}))
        ->capture_default_str();

    std::string vf_suite = "all";
    CLI::App* verify = app.add_subcommand("verify", "run the self-validation suites");
    verify->fallthrough();
    std::vector<std::string> suite_names = verify_suites();
    suite_names.push_back("all");
    verify->add_option("--suite", vf_suite, "suite name, or all")
        ->check(CLI::IsMember(suite_names))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (hauptmodul->parsed()) return cmd_hauptmodul(hm_m, hm_order, cfg);
        if (modpoly->parsed()) return cmd_modpoly(mp_m, mp_n, mp_kind, cfg);
        if (classnum->parsed())
            return cmd_classnum(cn_kind, cn_d, cn_p, p_opt->count() > 0, cfg);
        if (intersect->parsed()) return cmd_intersect(ix_m, ix_n1, ix_n2, ix_method, cfg);
        if (verify->parsed()) return cmd_verify(vf_suite, cfg);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
