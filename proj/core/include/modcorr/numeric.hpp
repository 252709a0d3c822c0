#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace modcorr {

/* All coefficient arithmetic is exact.  Int is an arbitrary-precision
   integer, Rat an arbitrary-precision rational kept in lowest terms by
   the backend. */
using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/* Exact quotient; caller guarantees divisibility. */
inline Int divexact(const Int& a, const Int& b) {
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_square(const Int& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

/* Kronecker symbol (a|n), fully general in both arguments. */
inline int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

/* gmpxx has no long long constructors; these are the lossless LP64
   bridges for the word-sized form arithmetic */
static_assert(sizeof(long) == sizeof(long long));
inline Int int_of(long long v) { return Int(static_cast<long>(v)); }
inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }

/* trial division; fine for the word-sized levels used here */
inline bool is_small_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

/* Rationals serialize as "p" for integers and "p/q" otherwise. */
inline std::string to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace modcorr
