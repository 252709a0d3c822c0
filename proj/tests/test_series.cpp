#include <doctest.h>

#include "modcorr/eta.hpp"
#include "modcorr/series.hpp"

using namespace modcorr;

TEST_CASE("monomial construction and coefficient access") {
    Series s = Series::monomial(Int(7), -2);
    CHECK(s.denom() == 1);
    CHECK(s.trunc() == Series::kInf);
    CHECK(s.min_exp() == -2);
    CHECK(s.coeff(-2) == 7);
    CHECK(s.coeff(0) == 0);
    CHECK_FALSE(s.is_zero());

    Series z(5, 1);
    CHECK(z.is_zero());
    CHECK(z.min_exp() == 5);
}

TEST_CASE("coefficient reads past the truncation bound throw") {
    Series s = Series::monomial(Int(1), 0, 3);
    CHECK(s.coeff(2) == 0);
    CHECK_THROWS_AS(s.coeff(3), PrecisionError);
    CHECK(s.known(2));
    CHECK_FALSE(s.known(3));
}

TEST_CASE("insert_term drops zeros and out-of-window terms, rejects duplicates") {
    Series s(4, 1);
    s.insert_term(1, Int(5));
    s.insert_term(2, Int(0));   /* zero: no term stored */
    s.insert_term(9, Int(3));   /* beyond trunc: dropped */
    CHECK(s.terms().size() == 1);
    CHECK_THROWS_AS(s.insert_term(1, Int(2)), IntegrityError);
}

TEST_CASE("addition merges and cancels") {
    Series a = Series::monomial(Int(3), 0) + Series::monomial(Int(2), 1);
    Series b = Series::monomial(Int(-3), 0) + Series::monomial(Int(5), 2);
    Series c = a + b;
    CHECK(c.coeff(0) == 0);
    CHECK(c.coeff(1) == 2);
    CHECK(c.coeff(2) == 5);
    CHECK(c.terms().size() == 2);

    Series half(10, 2);
    CHECK_THROWS_AS((void)(a + half), IntegrityError);
}

TEST_CASE("product truncation: min over trunc(a)+minexp(b) and trunc(b)+minexp(a)") {
    /* a = q^{-2} + ..., known below 4; b = q^{-1} + ..., known below 3 */
    Series a = Series::monomial(Int(1), -2, 4);
    Series b = Series::monomial(Int(1), -1, 3);
    Series p = a * b;
    CHECK(p.trunc() == 1);
    CHECK(p.coeff(-3) == 1);

    Series u = Series::monomial(Int(1), 0, 3) + Series::monomial(Int(1), 1, 3);
    Series m = Series::monomial(Int(1), 2);
    CHECK((u * m).trunc() == 5);
    CHECK((u * m).coeff(3) == 1);
}

TEST_CASE("difference of squares and pow") {
    Series x = Series::monomial(Int(1), -1) + Series::monomial(Int(1), 0);
    Series y = Series::monomial(Int(1), -1) - Series::monomial(Int(1), 0);
    Series d = x * y;
    CHECK(d.coeff(-2) == 1);
    CHECK(d.coeff(-1) == 0);
    CHECK(d.coeff(0) == -1);

    Series one_plus_q = Series::monomial(Int(1), 0) + Series::monomial(Int(1), 1);
    Series cube = one_plus_q.pow(3);
    CHECK(cube.coeff(0) == 1);
    CHECK(cube.coeff(1) == 3);
    CHECK(cube.coeff(2) == 3);
    CHECK(cube.coeff(3) == 1);
    CHECK(one_plus_q.pow(0).coeff(0) == 1);
}

TEST_CASE("shift and truncate") {
    Series s = Series::monomial(Int(4), 1, 6);
    Series t = s.shifted(-3);
    CHECK(t.coeff(-2) == 4);
    CHECK(t.trunc() == 3);

    Series u = Series::monomial(Int(1), 0) + Series::monomial(Int(9), 5);
    u.truncate_to(4);
    CHECK(u.trunc() == 4);
    CHECK(u.terms().size() == 1);
}

TEST_CASE("invert_unit gives a two-sided inverse inside the window") {
    Series s = Series::monomial(Int(1), 0, 8) - Series::monomial(Int(1), 1, 8);
    Series inv = invert_unit(s);
    for (long e = 0; e < inv.trunc(); ++e) CHECK(inv.coeff(e) == 1);

    Series pole = Series::monomial(Int(-1), -1, 6) + Series::monomial(Int(3), 2, 6);
    Series p = pole * invert_unit(pole);
    CHECK(p.coeff(0) == 1);
    for (long e = 1; e < p.trunc(); ++e) CHECK(p.coeff(e) == 0);

    Series bad = Series::monomial(Int(2), 0, 8);
    CHECK_THROWS_AS(invert_unit(bad), DomainError);
    CHECK_THROWS_AS(invert_unit(Series(5, 1)), DomainError);
    CHECK_THROWS_AS(invert_unit(Series::monomial(Int(1), 0)), DomainError);
}

TEST_CASE("conjugate by (a,0,1) dilates exponents by a^2 at denominator a") {
    Series t = Series::monomial(Int(1), -1) + Series::monomial(Int(7), 1);
    CycSeries c = conjugate_series(t, 2, 0, 1);
    CHECK(c.denom() == 2);
    Series back = descend_to_integer_series(c);
    CHECK(back.coeff(-2) == 1);
    CHECK(back.coeff(2) == 7);
}

TEST_CASE("trace over the two (1,b,2) conjugates doubles the even part") {
    Series t = Series::monomial(Int(1), -1) + Series::monomial(Int(5), 0) +
               Series::monomial(Int(7), 2);
    CycSeries sum = conjugate_series(t, 1, 0, 2) + conjugate_series(t, 1, 1, 2);
    Series back = descend_to_integer_series(sum);
    CHECK(back.coeff(0) == 10);
    CHECK(back.coeff(1) == 14);
    CHECK(back.coeff(-1) == 0);
}

TEST_CASE("galois action on conjugates permutes the translation index") {
    Series t = hauptmodul_series(3, 12);
    CycSeries lhs = galois_series(conjugate_series(t, 1, 1, 4), 3);
    CycSeries rhs = conjugate_series(t, 1, 3, 4);
    CHECK((lhs - rhs).is_zero());
}

TEST_CASE("descend rejects exponents off the integer lattice") {
    Series t = Series::monomial(Int(1), -1) + Series::monomial(Int(7), 1);
    /* (1,0,2) keeps odd u-exponents, which are not multiples of 2 */
    CHECK_THROWS_AS(descend_to_integer_series(conjugate_series(t, 1, 0, 2)),
                    IntegrityError);
}
