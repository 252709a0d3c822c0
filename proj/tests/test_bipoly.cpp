#include <doctest.h>

#include "modcorr/bipoly.hpp"
#include "modcorr/errors.hpp"
#include "modcorr/modpoly.hpp"

using namespace modcorr;

namespace {

BiPoly mono(long i, long j, const Rat& c) {
    BiPoly p;
    p.insert({i, j, 0}, c);
    return p;
}

/* X^i Y^j with coefficient c added onto p */
BiPoly& add(BiPoly& p, long i, long j, const Rat& c) {
    p.insert({i, j, 0}, c);
    return p;
}

}  // namespace

TEST_CASE("sparse arithmetic and evaluation") {
    BiPoly f = mono(1, 0, 1);
    add(f, 0, 1, -1);  /* X - Y */
    BiPoly g = mono(1, 0, 1);
    add(g, 0, 1, 1);   /* X + Y */

    BiPoly prod = f * g;
    CHECK(prod.coeff({2, 0, 0}) == 1);
    CHECK(prod.coeff({0, 2, 0}) == -1);
    CHECK(prod.coeff({1, 1, 0}) == 0);
    CHECK(prod.total_degree() == 2);
    CHECK(prod.degree(0) == 2);
    CHECK((f + g).coeff({1, 0, 0}) == 2);
    CHECK((f - f).is_zero());
    CHECK(prod.eval(Rat(3), Rat(2)) == 5);
    /* cancellation drops the stored term */
    BiPoly h = f;
    h.insert({1, 0, 0}, Rat(-1));
    CHECK(h.terms.size() == 1);
}

TEST_CASE("resultants of hand-sized pairs") {
    BiPoly a = mono(0, 1, 1);
    add(a, 1, 0, -1);  /* Y - X */
    BiPoly b = mono(0, 1, 1);
    add(b, 2, 0, -1);  /* Y - X^2 */

    BiPoly r = resultant_elim(a, b, 1);
    BiPoly expect = mono(1, 0, 1);
    add(expect, 2, 0, -1);  /* X - X^2 */
    CHECK(r == expect);
    /* odd-degree swap flips the sign */
    BiPoly rs = resultant_elim(b, a, 1);
    CHECK((r + rs).is_zero());

    /* rational scaling: Res_Y(Y - X/2, Y + X) = 3X/2 */
    BiPoly c = mono(0, 1, 1);
    add(c, 1, 0, Rat(-1, 2));
    BiPoly yx = mono(0, 1, 1);
    add(yx, 1, 0, 1);  /* Y + X */
    CHECK(resultant_elim(c, yx, 1) == mono(1, 0, Rat(3, 2)));

    /* Res_Y(Y^2 - X, Y^2 + X) = 4X^2 */
    BiPoly d = mono(0, 2, 1);
    add(d, 1, 0, -1);
    BiPoly e = mono(0, 2, 1);
    add(e, 1, 0, 1);
    CHECK(resultant_elim(d, e, 1) == mono(2, 0, 4));

    /* shared factor of positive Y-degree: identically zero */
    BiPoly sq = mono(2, 0, 1);
    add(sq, 0, 2, -1);  /* X^2 - Y^2 */
    BiPoly lin = mono(1, 0, 1);
    add(lin, 0, 1, -1); /* X - Y */
    CHECK(resultant_elim(sq, lin, 1).is_zero());

    CHECK_THROWS_AS(resultant_elim(a, mono(1, 0, 1), 1), DomainError);
    CHECK_THROWS_AS(resultant_elim(a, b, 2), DomainError);
    CHECK_THROWS_AS(resultant_elim(a, BiPoly{}, 1), DomainError);
}

TEST_CASE("gcd normalizes to a primitive polynomial with positive lead") {
    BiPoly diff = mono(1, 0, 1);
    add(diff, 0, 1, -1);  /* X - Y */
    BiPoly sq = mono(2, 0, 1);
    add(sq, 0, 2, -1);    /* X^2 - Y^2 */
    BiPoly dd = diff * diff;

    CHECK(bipoly_gcd(sq, dd) == diff);
    CHECK(bipoly_gcd(dd, sq) == diff);

    /* common scalars and rational scalings are stripped */
    BiPoly two = mono(0, 0, 2), four = mono(0, 0, 4), half = mono(0, 0, Rat(1, 2));
    CHECK(bipoly_gcd(two * sq, four * diff) == diff);
    CHECK(bipoly_gcd(half * diff, sq) == diff);

    /* a common column factor survives */
    BiPoly x = mono(1, 0, 1);
    BiPoly sum = mono(1, 0, 1);
    add(sum, 0, 1, 1);
    CHECK(bipoly_gcd(x * diff, x * sum) == x);

    /* coprime pairs collapse to 1 */
    BiPoly shifted = diff + mono(0, 0, 1);
    CHECK(bipoly_gcd(shifted, sum) == mono(0, 0, 1));

    CHECK_THROWS_AS(bipoly_gcd(BiPoly{}, diff), DomainError);
}

TEST_CASE("gcd detects the shared factor between composite transforms") {
    BiPoly f2 = bipoly_from_modpoly(phi_polynomial(1, 2));
    BiPoly f3 = bipoly_from_modpoly(phi_polynomial(1, 3));
    BiPoly f8 = bipoly_from_modpoly(phi_polynomial(1, 8));

    /* 2 * 8 = 16 is a square and the N = 2 factor is shared */
    CHECK(bipoly_gcd(f2, f8) == bipoly_from_modpoly(psi_polynomial(1, 2)));
    /* 2 * 3 = 6 is not */
    CHECK(bipoly_gcd(f2, f3).total_degree() == 0);
    CHECK(bipoly_gcd(f2, f2) == f2);
}

TEST_CASE("embedding a transform polynomial keeps every term") {
    ModPoly p = psi_polynomial(3, 2);
    BiPoly b = bipoly_from_modpoly(p);
    CHECK(b.terms.size() == p.terms.size());
    CHECK(b.coeff({3, 0, 0}) == 1);
    CHECK(b.coeff({1, 1, 0}) == -729);
    CHECK(b.degree(0) == p.degree_x());
    CHECK(b.degree(1) == p.degree_y());
}
