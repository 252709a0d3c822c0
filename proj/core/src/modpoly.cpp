#include "modcorr/modpoly.hpp"

#include <algorithm>

#include "modcorr/errors.hpp"
#include "modcorr/eta.hpp"
#include "modcorr/parallel.hpp"

namespace modcorr {

std::vector<UTRep> matrix_reps(long n, bool primitive_only) {
    if (n < 1) throw DomainError("determinant must be positive");
    std::vector<UTRep> reps;
    for (long a = 1; a <= n; ++a) {
        if (n % a) continue;
        long d = n / a;
        for (long b = 0; b < d; ++b) {
            if (primitive_only && gcd(gcd(Int(a), Int(b)), Int(d)) != 1) continue;
            reps.push_back({a, b, d});
        }
    }
    return reps;
}

long index_gamma0(long n) {
    if (n < 1) throw DomainError("index is defined for positive n");
    long res = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        res = res / p * (p + 1);
        while (m % p == 0) m /= p;
    }
    if (m > 1) res = res / m * (m + 1);
    return res;
}

long required_truncation(long level, long n, long guard) {
    if (guard < 1) throw DomainError("guard must be at least 1");
    if (n < 1) throw DomainError("determinant must be positive");
    if (!hauptmodul_supported(level))
        throw DomainError("no Hauptmodul at level " + std::to_string(level));
    if (gcd(Int(level), Int(n)) != 1)
        throw DomainError("level and determinant must be coprime");
    long sum = 0;
    for (const auto& r : matrix_reps(n, true)) sum += r.a * r.a;
    return sum + n * guard;
}

namespace {

/* shared reduction core; powers[r] = t^r, extended on demand */
std::map<long, Int> reduce_against(const Series& k, const std::vector<Series>& powers,
                                   long guard) {
    std::map<long, Int> p;
    Series rem = k;
    while (!rem.is_zero() && rem.min_exp() < 0) {
        long r = -rem.min_exp();
        if (static_cast<std::size_t>(r) >= powers.size())
            throw IntegrityError("pole order exceeds the prepared power table");
        Int c = rem.coeff(-r);
        rem = rem - Series::monomial(c, 0) * powers[static_cast<std::size_t>(r)];
        if (!rem.is_zero() && rem.min_exp() <= -r)
            throw IntegrityError("pole reduction failed to cancel the leading pole");
        p[r] = c;
    }
    if (rem.trunc() <= 0) throw PrecisionError("window closed before the constant term");
    Int c0 = rem.coeff(0);
    if (c0 != 0) {
        p[0] = c0;
        rem = rem - Series::monomial(c0, 0);
    }
    if (rem.trunc() <= guard)
        throw PrecisionError("remainder window shorter than the guard span");
    if (!rem.is_zero())
        throw DomainError("input is not a polynomial in the Hauptmodul");
    return p;
}

std::vector<Series> power_table(const Series& t, std::size_t max_pow) {
    std::vector<Series> powers;
    powers.reserve(max_pow + 1);
    powers.push_back(Series::monomial(Int(1), 0));
    for (std::size_t r = 1; r <= max_pow; ++r) powers.push_back(powers.back() * t);
    return powers;
}

ModPoly psi_attempt(long level, long n, long guard, unsigned threads) {
    std::vector<UTRep> reps = matrix_reps(n, true);
    long deg = index_gamma0(n);
    if (static_cast<long>(reps.size()) != deg)
        throw IntegrityError("representative count disagrees with the index");

    long tu = required_truncation(level, n, guard);
    Series t = hauptmodul_series(level, tu - 1);

    /* coefficients of prod_i (X - t_i), t_i at exponent denominator n */
    const CyclotomicRing& ring = CyclotomicRing::get(static_cast<unsigned>(n));
    std::vector<CycSeries> xc;
    xc.emplace_back(CycSeries::monomial(CycInt(ring, Int(1)), 0, CycSeries::kInf, n));
    for (const UTRep& rep : reps) {
        CycSeries s = conjugate_series(t, rep.a, rep.b, rep.d);
        xc.emplace_back(CycSeries(CycSeries::kInf, n));
        for (std::size_t j = xc.size() - 1; j > 0; --j) xc[j] = xc[j - 1] - s * xc[j];
        xc[0] = -s * xc[0];
    }

    std::vector<Series> rows(xc.size());
    for (std::size_t j = 0; j < xc.size(); ++j) {
        if (j < xc.size() - 1 && xc[j].trunc() <= n * guard)
            throw PrecisionError("conjugate product lost the guard window");
        rows[j] = descend_to_integer_series(xc[j]);
    }
    if (rows.back().min_exp() != 0 || rows.back().coeff(0) != 1 || rows.back().terms().size() != 1)
        throw IntegrityError("product of linear factors is not monic");

    std::vector<Series> powers = power_table(t, static_cast<std::size_t>(deg));
    std::vector<std::map<long, Int>> reduced(rows.size());
    parallel_for(rows.size() - 1, threads, [&](std::size_t j) {
        try {
            reduced[j] = reduce_against(rows[j], powers, guard);
        } catch (const DomainError&) {
            /* rows here are invariant by construction, so a certified
               nonzero remainder is an internal inconsistency */
            throw IntegrityError("symmetric function row is not polynomial in t");
        }
    });

    ModPoly out;
    out.level = level;
    out.n = n;
    out.kind = PolyKind::psi;
    out.terms[{deg, 0}] = 1;
    for (std::size_t j = 0; j + 1 < rows.size(); ++j)
        for (const auto& [r, c] : reduced[j]) out.terms[{static_cast<long>(j), r}] = c;

    /* \Psi_N(X,Y) = \Psi_N(Y,X) for N > 1; the lone N = 1 factor is X - Y */
    for (const auto& [ij, c] : out.terms)
        if (out.coeff(ij.second, ij.first) != (n == 1 ? -c : c))
            throw IntegrityError("modular polynomial is not symmetric in (X, Y)");
    if (out.degree_x() != deg || out.degree_y() != deg)
        throw IntegrityError("modular polynomial degree disagrees with the index");
    return out;
}

}  // namespace

std::map<long, Int> pole_reduce(const Series& k, const Series& t, long guard) {
    if (guard < 1) throw DomainError("guard must be at least 1");
    if (k.denom() != 1 || t.denom() != 1)
        throw DomainError("pole reduction expects integer q-exponents");
    if (t.is_zero() || t.min_exp() != -1 || t.coeff(-1) != 1)
        throw DomainError("expansion must start at q^{-1} with unit coefficient");
    long max_pow = std::max<long>(0, k.is_zero() ? 0 : -k.min_exp());
    return reduce_against(k, power_table(t, static_cast<std::size_t>(max_pow)), guard);
}

long ModPoly::degree_x() const {
    long d = 0;
    for (const auto& [ij, c] : terms) d = std::max(d, ij.first);
    return d;
}

long ModPoly::degree_y() const {
    long d = 0;
    for (const auto& [ij, c] : terms) d = std::max(d, ij.second);
    return d;
}

ModPoly psi_polynomial(long level, long n, long guard, unsigned threads) {
    required_truncation(level, n, guard); /* validates the arguments */
    try {
        return psi_attempt(level, n, guard, threads);
    } catch (const PrecisionError&) {
        /* one retry with a doubled certification window */
        return psi_attempt(level, n, 2 * guard, threads);
    }
}

ModPoly phi_polynomial(long level, long n, long guard, unsigned threads) {
    required_truncation(level, n, guard);
    ModPoly out;
    out.level = level;
    out.n = n;
    out.kind = PolyKind::phi;
    out.terms[{0, 0}] = 1;
    for (long k = 1; k * k <= n; ++k) {
        if (n % (k * k)) continue;
        ModPoly f = psi_polynomial(level, n / (k * k), guard, threads);
        std::map<std::pair<long, long>, Int> prod;
        for (const auto& [ij, c] : out.terms) {
            for (const auto& [kl, d] : f.terms) {
                Int v = c * d;
                if (v == 0) continue;
                auto key = std::make_pair(ij.first + kl.first, ij.second + kl.second);
                auto [it, fresh] = prod.emplace(key, v);
                if (!fresh) {
                    it->second += v;
                    if (it->second == 0) prod.erase(it);
                }
            }
        }
        out.terms = std::move(prod);
    }
    return out;
}

}  // namespace modcorr
