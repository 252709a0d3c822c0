#pragma once

#include <limits>
#include <map>
#include <utility>

#include "modcorr/cyclotomic.hpp"
#include "modcorr/errors.hpp"
#include "modcorr/numeric.hpp"

namespace modcorr {

namespace detail {
inline bool coef_is_zero(const Int& c) { return c == 0; }
inline bool coef_is_zero(const CycInt& c) { return c.is_zero(); }
inline Int coef_neg(const Int& c) { return -c; }
inline CycInt coef_neg(const CycInt& c) { return -c; }
}  // namespace detail

/* Sparse Laurent series in q^{1/denom} with exact coefficients.

   Exponents are stored as numerators over `denom`.  `trunc` is an
   exclusive bound: every coefficient with exponent < trunc is exact,
   anything at or above it is unknown.  Arithmetic propagates the bound
   soundly; reading a coefficient at or past it throws PrecisionError.
   A series with no stored terms is exactly zero below its bound. */
template <class Coef>
class SeriesT {
public:
    /* effectively "known everywhere": exact polynomials */
    static constexpr long kInf = std::numeric_limits<long>::max() / 4;

    SeriesT() : denom_(1), trunc_(kInf) {}
    explicit SeriesT(long trunc, long denom = 1) : denom_(denom), trunc_(trunc) {}

    static SeriesT monomial(Coef c, long exp, long trunc = kInf, long denom = 1) {
        SeriesT s(trunc, denom);
        if (exp < trunc && !detail::coef_is_zero(c)) s.terms_.emplace(exp, std::move(c));
        return s;
    }

    long denom() const { return denom_; }
    long trunc() const { return trunc_; }
    const std::map<long, Coef>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /* smallest exponent with a nonzero coefficient; the truncation bound
       for an (exactly-zero-so-far) empty series */
    long min_exp() const { return terms_.empty() ? trunc_ : terms_.begin()->first; }

    Coef coeff(long exp) const {
        if (exp >= trunc_)
            throw PrecisionError("coefficient request beyond truncation window");
        auto it = terms_.find(exp);
        if (it != terms_.end()) return it->second;
        return Coef{};
    }

    bool known(long exp) const { return exp < trunc_; }

    void insert_term(long exp, Coef c) {
        if (exp >= trunc_ || detail::coef_is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(exp, std::move(c));
        if (!fresh) throw IntegrityError("duplicate exponent in series construction");
    }

    SeriesT& truncate_to(long t) {
        if (t < trunc_) {
            trunc_ = t;
            terms_.erase(terms_.lower_bound(t), terms_.end());
        }
        return *this;
    }

    /* exponent shift by delta (numerator units) */
    SeriesT shifted(long delta) const {
        SeriesT r(sat_add(trunc_, delta), denom_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + delta, c);
        return r;
    }

    SeriesT operator-() const {
        SeriesT r(trunc_, denom_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, detail::coef_neg(c));
        return r;
    }

    friend SeriesT operator+(const SeriesT& a, const SeriesT& b) {
        if (a.denom_ != b.denom_)
            throw IntegrityError("series exponent denominators differ in addition");
        SeriesT r(std::min(a.trunc_, b.trunc_), a.denom_);
        for (const auto& [e, c] : a.terms_) {
            if (e >= r.trunc_) break;
            r.terms_.emplace(e, c);
        }
        for (const auto& [e, c] : b.terms_) {
            if (e >= r.trunc_) break;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e, c);
            } else {
                it->second += c;
                if (detail::coef_is_zero(it->second)) r.terms_.erase(it);
            }
        }
        return r;
    }

    friend SeriesT operator-(const SeriesT& a, const SeriesT& b) { return a + (-b); }

    /* Truncation of a product: coefficients of a*b at exponent e sum
       a_i * b_{e-i}; every contribution is known exactly as long as
       e < min(trunc(a) + minexp(b), trunc(b) + minexp(a)). */
    friend SeriesT operator*(const SeriesT& a, const SeriesT& b) {
        if (a.denom_ != b.denom_)
            throw IntegrityError("series exponent denominators differ in multiplication");
        long tr = std::min(sat_add(a.trunc_, b.min_exp()), sat_add(b.trunc_, a.min_exp()));
        SeriesT r(tr, a.denom_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                long e = ea + eb;
                if (e >= tr) break;  // b.terms_ ascending: later ones only larger
                Coef prod = ca * cb;
                if (detail::coef_is_zero(prod)) continue;
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) {
                    r.terms_.emplace(e, std::move(prod));
                } else {
                    it->second += prod;
                    if (detail::coef_is_zero(it->second)) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    SeriesT pow(unsigned long e) const {
        SeriesT result = monomial(unit_coef(), 0, kInf, denom_);
        SeriesT base = *this;
        while (e) {
            if (e & 1) result = result * base;
            base = (e >>= 1) ? base * base : std::move(base);
        }
        return result;
    }

    static long sat_add(long a, long b) {
        if (a >= kInf || b >= kInf) return kInf;
        long s = a + b;
        return s >= kInf ? kInf : s;
    }

private:
    static Coef unit_coef() {
        if constexpr (std::is_same_v<Coef, Int>) {
            return Int(1);
        } else {
            static_assert(std::is_same_v<Coef, CycInt>);
            throw IntegrityError("pow over cyclotomic series needs an explicit ring");
        }
    }

    long denom_;
    long trunc_;
    std::map<long, Coef> terms_;
};

using Series = SeriesT<Int>;
using CycSeries = SeriesT<CycInt>;

/* Reciprocal of a series whose lowest coefficient is a unit (+-1).
   If s = c q^m (1 + x) is known below trunc T, the reciprocal is
   certified below T - 2m. */
Series invert_unit(const Series& s);

/* An upper-triangular matrix (a, b; 0, d) acting on the expansion
   variable: q^m -> zeta_d^{m b} u^{m a^2} with u = q^{1/N}, N = a d,
   and zeta_d embedded as zeta_N^{N/d}.  Input exponents are integers
   (denom 1); the result lives at denominator N with coefficients in
   Z[zeta_N]. */
CycSeries conjugate_series(const Series& t, long a, long b, long d);

/* Coefficient-wise Galois action zeta -> zeta^s. */
CycSeries galois_series(const CycSeries& s, long sigma);

/* Checks every coefficient is a rational integer and every exponent is
   divisible by the series denominator, then rescales exponents to
   integer powers of q.  Violations are internal inconsistencies. */
Series descend_to_integer_series(const CycSeries& s);

}  // namespace modcorr
