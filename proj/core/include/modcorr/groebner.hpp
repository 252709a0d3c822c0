#pragma once

#include <vector>

#include "modcorr/bipoly.hpp"
#include "modcorr/modpoly.hpp"

namespace modcorr {

/* Graded reverse lexicographic order on exponent vectors: compare total
   degree first, then the last nonzero entry of a - b decides (negative
   means a is larger). */
bool degrevlex_less(const Mono& a, const Mono& b);

/* Reduced Groebner basis under degrevlex, computed by Buchberger's
   algorithm with the coprime-leading-term and chain pair eliminations.
   Output polynomials carry integer primitive coefficients with positive
   leading coefficient, sorted by leading monomial; the result depends
   only on the generated ideal.  pre: nonempty generator list. */
std::vector<BiPoly> groebner(const std::vector<BiPoly>& gens);

/* Dimension of the quotient algebra by the generated ideal: the number
   of monomials outside the leading-term ideal.  Requires a pure power
   of every variable among the leading terms (zero-dimensionality);
   otherwise DomainError "not zero-dimensional". */
long quotient_dim(const std::vector<BiPoly>& gens);

/* Total intersection multiplicity of the two plane curves over points
   with x y != 0, by saturating with an inverse variable: the quotient
   dimension of (p, q, W X Y - 1) in three variables.  pre: gcd(p, q)
   constant. */
long multiplicity_off_axes(const BiPoly& p, const BiPoly& q);

/* Intersection number of the divisors attached to phi1 and phi2,
   computed from the definition as a quotient dimension instead of the
   class-number formula.  Level 1 counts over the whole plane (the
   Hauptmodul is onto); prime levels count away from the coordinate
   axes, the omitted value t = 0 being the second cusp.  Composite
   levels are refused. */
Int oracle_intersection(long level, const ModPoly& phi1, const ModPoly& phi2);
Int oracle_intersection(long level, long n1, long n2, long guard = kDefaultGuard,
                        unsigned threads = 1);

}  // namespace modcorr
