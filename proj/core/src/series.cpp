#include "modcorr/series.hpp"

#include <vector>

namespace modcorr {

Series invert_unit(const Series& s) {
    if (s.is_zero()) throw DomainError("cannot invert the zero series");
    if (s.trunc() >= Series::kInf)
        throw DomainError("reciprocal needs a finite truncation window; truncate first");
    long m = s.min_exp();
    Int c0 = s.coeff(m);
    if (c0 != 1 && c0 != -1)
        throw DomainError("lowest series coefficient must be a unit to invert");

    /* v = q^{-m} s has constant term c0; solve v * r = 1 term by term.
       With c0^2 = 1 the recurrence is r_k = -c0 sum_{e>=1} v_e r_{k-e}. */
    Series v = s.shifted(-m);
    long tv = v.trunc();
    std::vector<Int> r(static_cast<std::size_t>(tv));
    r[0] = c0;
    for (long k = 1; k < tv; ++k) {
        Int acc = 0;
        for (const auto& [e, c] : v.terms()) {
            if (e > k) break;
            if (e >= 1) acc += c * r[static_cast<std::size_t>(k - e)];
        }
        r[static_cast<std::size_t>(k)] = -c0 * acc;
    }

    Series out(tv - m, 1);
    for (long k = 0; k < tv; ++k)
        out.insert_term(k - m, r[static_cast<std::size_t>(k)]);
    return out;
}

CycSeries conjugate_series(const Series& t, long a, long b, long d) {
    if (t.denom() != 1)
        throw IntegrityError("conjugation expects a series in integer powers of q");
    if (a < 1 || d < 1 || b < 0 || b >= d)
        throw DomainError("conjugation matrix must satisfy a,d >= 1 and 0 <= b < d");
    long n = a * d;
    const CyclotomicRing& ring = CyclotomicRing::get(static_cast<unsigned>(n));

    long tr = t.trunc() >= Series::kInf ? Series::kInf : t.trunc() * a * a;
    CycSeries out(tr, n);
    for (const auto& [m, c] : t.terms()) {
        long rb = (m % d) * b % d;
        if (rb < 0) rb += d;
        out.insert_term(m * a * a, CycInt::zeta_multiple(ring, (n / d) * rb, c));
    }
    return out;
}

CycSeries galois_series(const CycSeries& s, long sigma) {
    CycSeries out(s.trunc(), s.denom());
    for (const auto& [e, c] : s.terms()) out.insert_term(e, c.galois(sigma));
    return out;
}

Series descend_to_integer_series(const CycSeries& s) {
    long n = s.denom();
    long tr;
    if (s.trunc() >= CycSeries::kInf) {
        tr = Series::kInf;
    } else {
        /* q^e is certified iff e*n < trunc */
        tr = (s.trunc() + n - 1) / n;
    }
    Series out(tr, 1);
    for (const auto& [e, c] : s.terms()) {
        if (e % n != 0)
            throw IntegrityError("series exponent not divisible by the ambient level");
        if (!c.is_rational())
            throw IntegrityError("series coefficient has a nonzero cyclotomic part");
        out.insert_term(e / n, c.rational_part());
    }
    return out;
}

}  // namespace modcorr
