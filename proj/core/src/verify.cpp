#include "modcorr/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "modcorr/errors.hpp"
#include "modcorr/eta.hpp"
#include "modcorr/groebner.hpp"
#include "modcorr/intersect.hpp"
#include "modcorr/quadforms.hpp"
#include "modcorr/refdata.hpp"

namespace modcorr {

namespace {

using CheckBody = std::function<std::pair<bool, std::string>()>;

VerifyCheck timed_check(std::string id, std::string expected, const CheckBody& body) {
    VerifyCheck c;
    c.id = std::move(id);
    c.expected = std::move(expected);
    auto start = std::chrono::steady_clock::now();
    try {
        auto [pass, actual] = body();
        c.pass = pass;
        c.actual = std::move(actual);
    } catch (const std::exception& e) {
        c.pass = false;
        c.actual = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return c;
}

std::string describe_poly_diff(const ModPoly& want, const ModPoly& got) {
    for (const auto& [ij, c] : want.terms) {
        Int g = got.coeff(ij.first, ij.second);
        if (g != c)
            return "differs at (" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
                   "): expected " + to_string(c) + ", got " + to_string(g);
    }
    for (const auto& [ij, c] : got.terms)
        if (want.coeff(ij.first, ij.second) != c)
            return "unexpected term at (" + std::to_string(ij.first) + "," +
                   std::to_string(ij.second) + "): " + to_string(c);
    return "term-for-term match";
}

VerifyReport suite_polydata(long guard, unsigned threads) {
    VerifyReport rep{"polydata", {}};
    for (auto [level, n] : reference_rows()) {
        std::string id = "psi(M=" + std::to_string(level) + ",N=" + std::to_string(n) + ")";
        rep.checks.push_back(timed_check(id, "term-for-term match", [=] {
            ModPoly want = reference_psi(level, n);
            ModPoly got = psi_polynomial(level, n, guard, threads);
            return std::make_pair(got.terms == want.terms, describe_poly_diff(want, got));
        }));
    }
    return rep;
}

VerifyReport suite_routes(long, unsigned) {
    VerifyReport rep{"routes", {}};
    for (long long p : {2, 3, 5, 7, 13}) {
        std::string id = "three routes agree (p=" + std::to_string(p) + ", N1<=N2<=10)";
        rep.checks.push_back(timed_check(id, "exact agreement on every admissible pair", [p] {
            long tested = 0;
            for (long long n1 = 1; n1 <= 10; ++n1) {
                for (long long n2 = n1; n2 <= 10; ++n2) {
                    if (std::gcd(n1 * n2, p) != 1 || is_square(int_of(n1) * int_of(n2))) continue;
                    Int a = intersection_gamma0(p, n1, n2);
                    Int b = intersection_gamma0_Ap(p, n1, n2);
                    Int c = intersection_eisenstein(p, n1, n2);
                    if (a != b || b != c)
                        return std::make_pair(
                            false, "disagreement at (" + std::to_string(n1) + "," +
                                       std::to_string(n2) + "): " + to_string(a) + " / " +
                                       to_string(b) + " / " + to_string(c));
                    ++tested;
                }
            }
            return std::make_pair(true, "exact agreement on every admissible pair (" +
                                            std::to_string(tested) + " pairs)");
        }));
    }
    return rep;
}

VerifyReport suite_oracle(long guard, unsigned threads) {
    VerifyReport rep{"oracle", {}};
    struct Job {
        long level, n1, n2;
        const char* frozen;
    };
    for (const Job& job : {Job{1, 2, 3, "18"}, Job{5, 2, 3, "12"}}) {
        std::string tag = "(M=" + std::to_string(job.level) + ",N1=" + std::to_string(job.n1) +
                          ",N2=" + std::to_string(job.n2) + ")";
        rep.checks.push_back(timed_check("definition count " + tag, job.frozen, [=] {
            Int v = oracle_intersection(job.level, job.n1, job.n2, guard, threads);
            return std::make_pair(v == Int(job.frozen), to_string(v));
        }));
        rep.checks.push_back(timed_check("formula count " + tag, job.frozen, [=] {
            Int v = intersection_gamma0(job.level, job.n1, job.n2);
            return std::make_pair(v == Int(job.frozen), to_string(v));
        }));
    }
    return rep;
}

VerifyReport suite_properness(long guard, unsigned threads) {
    VerifyReport rep{"properness", {}};
    for (long level : {1L, 3L, 5L}) {
        std::string id = "gcd constant iff non-square (M=" + std::to_string(level) + ", N<=8)";
        rep.checks.push_back(timed_check(id, "iff holds on every pair", [=] {
            std::map<long, BiPoly> phi;
            for (long n = 1; n <= 8; ++n) {
                if (std::gcd(n, level) != 1) continue;
                phi[n] = bipoly_from_modpoly(phi_polynomial(level, n, guard, threads));
            }
            long tested = 0;
            for (const auto& [n1, p1] : phi) {
                for (const auto& [n2, p2] : phi) {
                    if (n2 < n1) continue;
                    bool constant = bipoly_gcd(p1, p2).total_degree() == 0;
                    bool proper = !is_square(int_of(n1) * int_of(n2));
                    if (constant != proper)
                        return std::make_pair(false, "pair (" + std::to_string(n1) + "," +
                                                         std::to_string(n2) + "): gcd " +
                                                         (constant ? "constant" : "non-constant") +
                                                         " but product " +
                                                         (proper ? "non-square" : "square"));
                    ++tested;
                }
            }
            return std::make_pair(true, "iff holds on every pair (" + std::to_string(tested) +
                                            " pairs)");
        }));
    }
    return rep;
}

VerifyReport suite_hurwitz(long, unsigned) {
    VerifyReport rep{"hurwitz", {}};
    rep.checks.push_back(timed_check(
        "H(D) = sum over f^2 | D of primitive h(D/f^2), D <= 10000", "0 mismatches", [] {
            long mismatches = 0;
            std::string first;
            for (long long d = 1; d <= 10000; ++d) {
                Rat split(0);
                for (long long f = 1; f * f <= d; ++f) {
                    if (d % (f * f)) continue;
                    split += primitive_h(d / (f * f));
                }
                if (split != hurwitz_H(d)) {
                    if (mismatches == 0)
                        first = " (first: D=" + std::to_string(d) + ")";
                    ++mismatches;
                }
            }
            return std::make_pair(mismatches == 0,
                                  std::to_string(mismatches) + " mismatches" + first);
        }));
    return rep;
}

VerifyReport suite_identities(long, unsigned) {
    VerifyReport rep{"identities", {}};

    rep.checks.push_back(timed_check(
        "divisor-sum identity (p in {2,3,5,7,13}, D <= 500, e^2 | D, p does not divide e)",
        "0 failures", [] {
            long failures = 0, tested = 0;
            std::string first;
            for (long long p : {2, 3, 5, 7, 13}) {
                for (long long d = 3; d <= 500; ++d) {
                    if (d % 4 == 1 || d % 4 == 2) continue;
                    Rat ap = Ap(p, d);
                    for (long long e = 1; e * e <= d; ++e) {
                        if (d % (e * e) || e % p == 0) continue;
                        Rat lhs(0), rhs(0);
                        for (long long k = 1; k <= e; ++k) {
                            if (e % k) continue;
                            long long dd = d / (k * k);
                            if (dd % 4 == 0 || dd % 4 == 3) lhs += rat_of(k) * HM_prime(p, dd);
                            rhs += rat_of(k) * hurwitz_H(dd);
                        }
                        rhs *= ap;
                        ++tested;
                        if (lhs != rhs) {
                            if (failures == 0)
                                first = " (first: p=" + std::to_string(p) +
                                        ", D=" + std::to_string(d) + ", e=" + std::to_string(e) +
                                        ")";
                            ++failures;
                        }
                    }
                }
            }
            return std::make_pair(failures == 0, std::to_string(failures) + " failures of " +
                                                     std::to_string(tested) + first);
        }));

    rep.checks.push_back(timed_check(
        "correction factor equals 1 + chi when p^2 does not divide D (D <= 2000)", "0 failures",
        [] {
            long failures = 0, tested = 0;
            std::string first;
            for (long long p : {2, 3, 5, 7, 13}) {
                for (long long d = 3; d <= 2000; ++d) {
                    if (d % 4 == 1 || d % 4 == 2 || d % (p * p) == 0) continue;
                    ++tested;
                    if (Ap(p, d) != Rat(1 + chi(d, p))) {
                        if (failures == 0)
                            first = " (first: p=" + std::to_string(p) + ", D=" +
                                    std::to_string(d) + ")";
                        ++failures;
                    }
                }
            }
            return std::make_pair(failures == 0, std::to_string(failures) + " failures of " +
                                                     std::to_string(tested) + first);
        }));

    rep.checks.push_back(timed_check(
        "enumerated class ratio matches its closed form (p^2 | D <= 2000)", "0 failures", [] {
            long failures = 0, tested = 0;
            std::string first;
            for (long long p : {2, 3, 5, 7, 13}) {
                for (long long d = p * p; d <= 2000; d += p * p) {
                    if (d % 4 == 1 || d % 4 == 2) continue;
                    ++tested;
                    try {
                        class_ratio(p, d);  // asserts the closed form internally
                    } catch (const std::exception&) {
                        if (failures == 0)
                            first = " (first: p=" + std::to_string(p) + ", D=" +
                                    std::to_string(d) + ")";
                        ++failures;
                    }
                }
            }
            return std::make_pair(failures == 0, std::to_string(failures) + " failures of " +
                                                     std::to_string(tested) + first);
        }));

    rep.checks.push_back(timed_check(
        "orbit closure matches the prime-level count (p in {2,3,5}, D <= 200)", "0 mismatches",
        [] {
            long mismatches = 0, tested = 0;
            std::string first;
            for (long long p : {2, 3, 5}) {
                for (long long d = 3; d <= 200; ++d) {
                    if (d % 4 == 1 || d % 4 == 2) continue;
                    ++tested;
                    if (HM_orbit(p, d) != HM_prime(p, d)) {
                        if (mismatches == 0)
                            first = " (first: p=" + std::to_string(p) + ", D=" +
                                    std::to_string(d) + ")";
                        ++mismatches;
                    }
                }
            }
            return std::make_pair(mismatches == 0, std::to_string(mismatches) +
                                                       " mismatches of " + std::to_string(tested) +
                                                       first);
        }));

    return rep;
}

Series dilate_exponents(const Series& s, long k) {
    long t = s.trunc() >= Series::kInf / k ? Series::kInf : s.trunc() * k;
    Series r(t, s.denom());
    for (const auto& [e, c] : s.terms()) r.insert_term(e * k, c);
    return r;
}

/* substitutes X = t(q^n), Y = t(q) and requires the result to vanish
   identically through a window past the constant term */
std::pair<bool, std::string> root_identity(const ModPoly& p, long guard) {
    long deg = p.degree_x();
    long order = deg * (p.n + 1) + guard + 4;
    Series t = hauptmodul_series(p.level, order);
    Series tn = dilate_exponents(t, p.n);

    std::vector<Series> xp(static_cast<std::size_t>(deg) + 1), yp(xp.size());
    xp[0] = Series::monomial(Int(1), 0);
    yp[0] = xp[0];
    for (std::size_t i = 1; i < xp.size(); ++i) {
        xp[i] = xp[i - 1] * tn;
        yp[i] = yp[i - 1] * t;
    }
    Series acc;
    for (const auto& [ij, c] : p.terms)
        acc = acc + Series::monomial(c, 0) * xp[static_cast<std::size_t>(ij.first)] *
                        yp[static_cast<std::size_t>(ij.second)];
    if (!acc.is_zero())
        return {false, "nonzero residual at exponent " + std::to_string(acc.min_exp())};
    if (acc.trunc() <= guard)
        return {false, "certified window too short (" + std::to_string(acc.trunc()) + ")"};
    return {true, "vanishes through the window"};
}

VerifyReport suite_structural(long guard, unsigned threads) {
    VerifyReport rep{"structural", {}};
    for (long level : supported_levels()) {
        std::string id = "symmetry, degree, root identity (M=" + std::to_string(level) +
                         ", N<=7)";
        rep.checks.push_back(timed_check(id, "all hold", [=] {
            for (long n = 1; n <= 7; ++n) {
                if (std::gcd(level, n) != 1) continue;
                ModPoly psi = psi_polynomial(level, n, guard, threads);
                std::string tag = " (N=" + std::to_string(n) + ")";
                /* symmetric for N > 1, the lone N = 1 factor is X - Y */
                for (const auto& [ij, c] : psi.terms)
                    if (psi.coeff(ij.second, ij.first) != (n == 1 ? -c : c))
                        return std::make_pair(false, "asymmetric term" + tag);
                long deg = index_gamma0(n);
                if (psi.degree_x() != deg || psi.degree_y() != deg)
                    return std::make_pair(false, "degree " + std::to_string(psi.degree_x()) +
                                                     " != " + std::to_string(deg) + tag);
                auto [ok, detail] = root_identity(psi, guard);
                if (!ok) return std::make_pair(false, detail + tag);
            }
            return std::make_pair(true, std::string("all hold"));
        }));
    }
    return rep;
}

VerifyReport suite_bijection(long, unsigned) {
    VerifyReport rep{"bijection", {}};
    struct Pinned {
        long long e, d, m;
    };
    for (const Pinned& c : {Pinned{1, 3, 2}, Pinned{2, 16, 3}, Pinned{2, 12, 2}}) {
        std::string id = "pinned instance (e=" + std::to_string(c.e) + ", D=" +
                         std::to_string(c.d) + ", M=" + std::to_string(c.m) + ")";
        rep.checks.push_back(timed_check(id, "bijection verified", [=] {
            ScalingBijectionReport r = scaling_bijection_check(c.e, c.d, c.m);
            if (!r.verified()) return std::make_pair(false, r.violations.front());
            return std::make_pair(true, "bijection verified (" + std::to_string(r.set1_size) +
                                            " <-> " + std::to_string(r.set2_size) + ")");
        }));
    }
    rep.checks.push_back(
        timed_check("randomized sample (e <= 4, D <= 400, 30 draws)", "0 violations", [] {
            std::mt19937 rng(20260814u);
            std::uniform_int_distribution<long long> pick_e(1, 4), pick_m(1, 13);
            long violations = 0;
            std::string first;
            for (int k = 0; k < 30; ++k) {
                long long e = pick_e(rng);
                long long m = pick_m(rng);
                std::uniform_int_distribution<long long> pick_mult(1, 400 / (e * e));
                long long d = pick_mult(rng) * e * e;
                ScalingBijectionReport r = scaling_bijection_check(e, d, m);
                if (!r.verified()) {
                    if (violations == 0)
                        first = " (first: e=" + std::to_string(e) + ", D=" + std::to_string(d) +
                                ", M=" + std::to_string(m) + ": " + r.violations.front() + ")";
                    ++violations;
                }
            }
            return std::make_pair(violations == 0, std::to_string(violations) + " violations" +
                                                       first);
        }));
    return rep;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names = {"polydata",   "routes",  "oracle",
                                                   "properness", "hurwitz", "identities",
                                                   "structural", "bijection"};
    return names;
}

VerifyReport run_suite(const std::string& suite, long guard, unsigned threads) {
    if (suite == "polydata") return suite_polydata(guard, threads);
    if (suite == "routes") return suite_routes(guard, threads);
    if (suite == "oracle") return suite_oracle(guard, threads);
    if (suite == "properness") return suite_properness(guard, threads);
    if (suite == "hurwitz") return suite_hurwitz(guard, threads);
    if (suite == "identities") return suite_identities(guard, threads);
    if (suite == "structural") return suite_structural(guard, threads);
    if (suite == "bijection") return suite_bijection(guard, threads);
    throw DomainError("unknown verification suite: " + suite);
}

std::vector<VerifyReport> run_suites(const std::string& suite, long guard, unsigned threads) {
    std::vector<VerifyReport> out;
    if (suite == "all") {
        for (const std::string& name : verify_suites())
            out.push_back(run_suite(name, guard, threads));
    } else {
        out.push_back(run_suite(suite, guard, threads));
    }
    return out;
}

}  // namespace modcorr
