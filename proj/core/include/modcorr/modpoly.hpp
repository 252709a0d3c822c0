#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "modcorr/series.hpp"

namespace modcorr {

/* Upper-triangular representative (a, b; 0, d) with a d = N. */
struct UTRep {
    long a, b, d;
};

/* Representatives with determinant n, b reduced mod d, ordered by
   (a, b); primitive_only keeps gcd(a, b, d) = 1. */
std::vector<UTRep> matrix_reps(long n, bool primitive_only = true);

/* [SL2(Z) : Gamma_0(n)] = n prod_{p | n} (1 + 1/p); this is also the
   number of primitive representatives. */
long index_gamma0(long n);

/* Working expansion length in u = q^{1/n}: sum of a^2 over primitive
   representatives plus n * guard.  The tail of length n * guard is what
   certifies pole reduction remainders through q^guard. */
long required_truncation(long level, long n, long guard);

/* Expresses a series k with a pole at q = 0 as an integer-coefficient
   polynomial p(t) of the Hauptmodul t = q^{-1} + O(1): returns exponent
   -> coefficient.  The remainder k - p(t) must be certified zero on a
   window of length `guard` past the constant term; a window too short
   raises PrecisionError, a certified nonzero remainder DomainError. */
std::map<long, Int> pole_reduce(const Series& k, const Series& t, long guard);

enum class PolyKind { psi, phi };

/* Bivariate polynomial with integer coefficients, stored sparsely as
   (deg_X, deg_Y) -> coefficient. */
struct ModPoly {
    long level = 1;
    long n = 1;
    PolyKind kind = PolyKind::psi;
    std::map<std::pair<long, long>, Int> terms;

    Int coeff(long i, long j) const {
        auto it = terms.find({i, j});
        return it == terms.end() ? Int(0) : it->second;
    }
    long degree_x() const;
    long degree_y() const;
    bool operator==(const ModPoly& o) const {
        return level == o.level && n == o.n && kind == o.kind && terms == o.terms;
    }
};

inline constexpr long kDefaultGuard = 8;

/* Minimal polynomial Psi_n of t((a tau + b)/d) over the primitive
   representatives: monic of degree index_gamma0(n) in X, symmetric in
   (X, Y), integer coefficients.  Retries once with a doubled guard if
   the certification window is exhausted.  pre: gcd(level, n) = 1 and
   the level carries a Hauptmodul. */
ModPoly psi_polynomial(long level, long n, long guard = kDefaultGuard, unsigned threads = 1);

/* Product over square divisors: Phi_n = prod_{k^2 | n} Psi_{n / k^2};
   vanishing locus meets all representatives of determinant n. */
ModPoly phi_polynomial(long level, long n, long guard = kDefaultGuard, unsigned threads = 1);

}  // namespace modcorr
