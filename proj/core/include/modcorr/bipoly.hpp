#pragma once

#include <array>
#include <map>

#include "modcorr/modpoly.hpp"
#include "modcorr/numeric.hpp"

namespace modcorr {

/* Exponent vector; trailing entries stay zero when fewer than three
   variables are in play.  Variable indices: X = 0, Y = 1, W = 2. */
using Mono = std::array<long, 3>;

/* Sparse polynomial over Q in 2 or 3 variables. */
struct BiPoly {
    int nvars = 2;
    std::map<Mono, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    long degree(int var) const;
    long total_degree() const;
    void insert(const Mono& m, const Rat& c);
    Rat coeff(const Mono& m) const;
    Rat eval(const Rat& x, const Rat& y) const;
    bool operator==(const BiPoly& o) const { return nvars == o.nvars && terms == o.terms; }
};

BiPoly bipoly_from_modpoly(const ModPoly& p);

BiPoly operator+(const BiPoly& a, const BiPoly& b);
BiPoly operator-(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);

/* Resultant with respect to `var` (0 = X, 1 = Y) by the subresultant
   remainder sequence; identically zero iff the inputs share a factor of
   positive degree in that variable. */
BiPoly resultant_elim(const BiPoly& p, const BiPoly& q, int var);

/* Polynomial gcd over Q[X, Y], returned with integer primitive
   coefficients and positive leading coefficient; constant iff the two
   curves share no component. */
BiPoly bipoly_gcd(const BiPoly& p, const BiPoly& q);

}  // namespace modcorr
