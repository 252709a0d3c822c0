#include "modcorr/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

#include "modcorr/errors.hpp"
#include "modcorr/eta.hpp"
#include "modcorr/intersect.hpp"

namespace modcorr {

bool degrevlex_less(const Mono& a, const Mono& b) {
    long ta = a[0] + a[1] + a[2];
    long tb = b[0] + b[1] + b[2];
    if (ta != tb) return ta < tb;
    for (int i = 2; i >= 0; --i) {
        long d = a[i] - b[i];
        if (d != 0) return d > 0;
    }
    return false;
}

namespace {

long mono_tdeg(const Mono& m) { return m[0] + m[1] + m[2]; }

bool mono_divides(const Mono& a, const Mono& b) {
    return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

Mono mono_lcm(const Mono& a, const Mono& b) {
    return {std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2])};
}

Mono lead_mono(const BiPoly& p) {
    auto it = p.terms.begin();
    Mono best = it->first;
    for (++it; it != p.terms.end(); ++it)
        if (degrevlex_less(best, it->first)) best = it->first;
    return best;
}

/* rescale to integer coefficients with content 1 and a positive leading
   coefficient; this keeps intermediate fractions from compounding */
void content_strip(BiPoly& p) {
    if (p.is_zero()) return;
    Int den(1), num(0);
    for (const auto& [m, c] : p.terms) den = lcm(den, c.get_den());
    for (const auto& [m, c] : p.terms) {
        Rat v = c * Rat(den);
        v.canonicalize();
        num = gcd(num, v.get_num());
    }
    Rat scale = Rat(den) / Rat(num);
    if (p.terms.at(lead_mono(p)) < 0) scale = -scale;
    for (auto& [m, c] : p.terms) c *= scale;
}

/* full normal form: no term of the result is divisible by any leading
   monomial of the basis; ties resolved largest-term, first-divisor */
BiPoly normal_form(BiPoly p, const std::vector<BiPoly>& basis, const std::vector<Mono>& lm,
                   const std::vector<bool>& live) {
    for (;;) {
        bool found = false;
        Mono bm{0, 0, 0};
        Rat bc;
        std::size_t bk = 0;
        for (const auto& [m, c] : p.terms) {
            if (found && !degrevlex_less(bm, m)) continue;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (!live[k] || !mono_divides(lm[k], m)) continue;
                found = true;
                bm = m;
                bc = c;
                bk = k;
                break;
            }
        }
        if (!found) return p;
        Mono shift{bm[0] - lm[bk][0], bm[1] - lm[bk][1], bm[2] - lm[bk][2]};
        Rat f = bc / basis[bk].terms.at(lm[bk]);
        for (const auto& [m, c] : basis[bk].terms)
            p.insert({m[0] + shift[0], m[1] + shift[1], m[2] + shift[2]}, -(f * c));
    }
}

BiPoly s_polynomial(const BiPoly& f, const BiPoly& g, const Mono& lmf, const Mono& lmg) {
    Mono l = mono_lcm(lmf, lmg);
    Mono sf{l[0] - lmf[0], l[1] - lmf[1], l[2] - lmf[2]};
    Mono sg{l[0] - lmg[0], l[1] - lmg[1], l[2] - lmg[2]};
    Rat cf = f.terms.at(lmf);
    Rat cg = g.terms.at(lmg);
    BiPoly s;
    s.nvars = std::max(f.nvars, g.nvars);
    for (const auto& [m, c] : f.terms)
        s.insert({m[0] + sf[0], m[1] + sf[1], m[2] + sf[2]}, c / cf);
    for (const auto& [m, c] : g.terms)
        s.insert({m[0] + sg[0], m[1] + sg[1], m[2] + sg[2]}, -(c / cg));
    return s;
}

/* pair queue ordered by (total degree of lcm, degrevlex of lcm, i, j) */
struct PairOrder {
    bool operator()(const std::tuple<long, Mono, std::size_t, std::size_t>& a,
                    const std::tuple<long, Mono, std::size_t, std::size_t>& b) const {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        if (std::get<1>(a) != std::get<1>(b)) return degrevlex_less(std::get<1>(a), std::get<1>(b));
        if (std::get<2>(a) != std::get<2>(b)) return std::get<2>(a) < std::get<2>(b);
        return std::get<3>(a) < std::get<3>(b);
    }
};

}  // namespace

std::vector<BiPoly> groebner(const std::vector<BiPoly>& gens) {
    if (gens.empty()) throw DomainError("empty generator list");
    int nv = 2;
    for (const auto& g : gens) nv = std::max(nv, g.nvars);

    std::vector<BiPoly> basis;
    std::vector<Mono> lm;
    for (BiPoly g : gens) {
        if (g.is_zero()) continue;
        g.nvars = nv;
        content_strip(g);
        basis.push_back(std::move(g));
        lm.push_back(lead_mono(basis.back()));
    }
    if (basis.empty()) return {};
    std::vector<bool> live(basis.size(), true);

    std::set<std::tuple<long, Mono, std::size_t, std::size_t>, PairOrder> queue;
    std::set<std::pair<std::size_t, std::size_t>> waiting;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Mono l = mono_lcm(lm[i], lm[j]);
        queue.insert({mono_tdeg(l), l, i, j});
        waiting.insert({i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    while (!queue.empty()) {
        auto [t, l, i, j] = *queue.begin();
        queue.erase(queue.begin());
        waiting.erase({i, j});

        /* coprime leading terms reduce to zero */
        Mono sum{lm[i][0] + lm[j][0], lm[i][1] + lm[j][1], lm[i][2] + lm[j][2]};
        if (sum == l) continue;
        /* chain elimination: a third element dividing the lcm whose two
           pairs are no longer outstanding makes this pair redundant */
        bool redundant = false;
        for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == i || k == j || !mono_divides(lm[k], l)) continue;
            auto a = std::minmax(i, k);
            auto b = std::minmax(j, k);
            if (!waiting.count({a.first, a.second}) && !waiting.count({b.first, b.second}))
                redundant = true;
        }
        if (redundant) continue;

        BiPoly r = normal_form(s_polynomial(basis[i], basis[j], lm[i], lm[j]), basis, lm, live);
        if (r.is_zero()) continue;
        content_strip(r);
        basis.push_back(std::move(r));
        lm.push_back(lead_mono(basis.back()));
        live.push_back(true);
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) push_pair(k, basis.size() - 1);
    }

    /* minimal basis: drop elements whose leading monomial another kept
       element's leading monomial divides (divisors are never larger) */
    std::vector<std::size_t> order(basis.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (lm[a] != lm[b]) return degrevlex_less(lm[a], lm[b]);
        return a < b;
    });
    std::fill(live.begin(), live.end(), false);
    std::vector<std::size_t> kept;
    for (std::size_t k : order) {
        bool covered = false;
        for (std::size_t i : kept)
            if (mono_divides(lm[i], lm[k])) {
                covered = true;
                break;
            }
        if (!covered) {
            kept.push_back(k);
            live[k] = true;
        }
    }

    /* tail inter-reduction against the other kept elements */
    std::vector<BiPoly> out;
    for (std::size_t k : kept) {
        live[k] = false;
        BiPoly h = normal_form(basis[k], basis, lm, live);
        live[k] = true;
        content_strip(h);
        out.push_back(std::move(h));
    }
    return out;
}

long quotient_dim(const std::vector<BiPoly>& gens) {
    std::vector<BiPoly> basis = groebner(gens);
    if (basis.empty()) throw DomainError("not zero-dimensional");
    int nv = 2;
    for (const auto& g : gens) nv = std::max(nv, g.nvars);

    std::vector<Mono> lm;
    for (const auto& g : basis) {
        lm.push_back(lead_mono(g));
        if (mono_tdeg(lm.back()) == 0) return 0;
    }
    Mono bound{1, 1, 1};
    for (int v = 0; v < nv; ++v) {
        long best = -1;
        for (const auto& m : lm) {
            if (mono_tdeg(m) != m[static_cast<std::size_t>(v)]) continue;
            if (best < 0 || m[static_cast<std::size_t>(v)] < best)
                best = m[static_cast<std::size_t>(v)];
        }
        if (best < 0) throw DomainError("not zero-dimensional");
        bound[static_cast<std::size_t>(v)] = best;
    }

    long count = 0;
    for (long x = 0; x < bound[0]; ++x)
        for (long y = 0; y < bound[1]; ++y)
            for (long w = 0; w < bound[2]; ++w) {
                Mono m{x, y, w};
                bool standard = true;
                for (const auto& l : lm)
                    if (mono_divides(l, m)) {
                        standard = false;
                        break;
                    }
                count += standard ? 1 : 0;
            }
    return count;
}

long multiplicity_off_axes(const BiPoly& p, const BiPoly& q) {
    if (p.is_zero() || q.is_zero()) throw DomainError("zero polynomial has no divisor");
    if (bipoly_gcd(p, q).total_degree() != 0)
        throw DomainError("non-proper input: the curves share a component");
    BiPoly a = p, b = q, sat;
    a.nvars = 3;
    b.nvars = 3;
    sat.nvars = 3;
    sat.insert({1, 1, 1}, Rat(1));
    sat.insert({0, 0, 0}, Rat(-1));
    return quotient_dim({a, b, sat});
}

Int oracle_intersection(long level, const ModPoly& phi1, const ModPoly& phi2) {
    if (level != 1 && !(is_small_prime(level) && hauptmodul_supported(level)))
        throw DomainError("definition-based evaluation needs level 1 or a genus-zero prime");
    if (phi1.level != level || phi2.level != level)
        throw DomainError("polynomial level does not match the requested level");
    if (!is_proper(level, phi1.n, phi2.n)) throw DomainError("non-proper: N1*N2 is a square");
    BiPoly a = bipoly_from_modpoly(phi1);
    BiPoly b = bipoly_from_modpoly(phi2);
    if (level == 1) return Int(quotient_dim({a, b}));
    return Int(multiplicity_off_axes(a, b));
}

Int oracle_intersection(long level, long n1, long n2, long guard, unsigned threads) {
    if (level != 1 && !(is_small_prime(level) && hauptmodul_supported(level)))
        throw DomainError("definition-based evaluation needs level 1 or a genus-zero prime");
    if (!is_proper(level, n1, n2)) throw DomainError("non-proper: N1*N2 is a square");
    ModPoly p1 = phi_polynomial(level, n1, guard, threads);
    ModPoly p2 = phi_polynomial(level, n2, guard, threads);
    return oracle_intersection(level, p1, p2);
}

}  // namespace modcorr
