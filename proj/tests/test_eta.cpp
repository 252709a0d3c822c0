#include <doctest.h>

#include <vector>

#include "modcorr/eta.hpp"

using namespace modcorr;

TEST_CASE("eta unit factor follows the pentagonal-number pattern") {
    Series e = eta_unit_series(1, 12);
    CHECK(e.coeff(0) == 1);
    CHECK(e.coeff(1) == -1);
    CHECK(e.coeff(2) == -1);
    CHECK(e.coeff(3) == 0);
    CHECK(e.coeff(4) == 0);
    CHECK(e.coeff(5) == 1);
    CHECK(e.coeff(7) == 1);
    CHECK(e.coeff(12) == -1);

    Series e2 = eta_unit_series(2, 10);
    CHECK(e2.coeff(2) == -1);
    CHECK(e2.coeff(4) == -1);
    CHECK(e2.coeff(10) == 1);
    CHECK(e2.coeff(1) == 0);

    CHECK_THROWS_AS(eta_unit_series(0, 4), DomainError);
    CHECK_THROWS_AS(eta_unit_series(2, -1), DomainError);
}

TEST_CASE("supported levels and rejection of the rest") {
    const std::vector<long> expected = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25};
    CHECK(supported_levels() == expected);
    for (long m : expected) CHECK(hauptmodul_supported(m));
    CHECK_FALSE(hauptmodul_supported(11));
    CHECK_FALSE(hauptmodul_supported(14));
    CHECK_THROWS_AS(hauptmodul_series(11, 4), DomainError);
    CHECK_THROWS_AS(hauptmodul_series(2, -1), DomainError);
}

/* expansions through q^7, fixed by an independent series computation */
static const struct {
    long level;
    long coeff[9]; /* exponents -1 .. 7 */
} kExpansions[] = {
    {2, {1, -24, 276, -2048, 11202, -49152, 184024, -614400, 1881471}},
    {3, {1, -12, 54, -76, -243, 1188, -1384, -2916, 11934}},
    {4, {1, -8, 20, 0, -62, 0, 216, 0, -641}},
    {5, {1, -6, 9, 10, -30, 6, -25, 96, 60}},
    {6, {1, -5, 6, 4, -3, -12, -8, 12, 30}},
    {7, {1, -4, 2, 8, -5, -4, -10, 12, -7}},
    {8, {1, -4, 4, 0, 2, 0, -8, 0, -1}},
    {9, {1, -3, 0, 5, 0, 0, -7, 0, 0}},
    {10, {1, -3, 1, 2, 2, -2, -1, 0, -4}},
    {12, {1, -3, 2, 0, 1, 0, 0, 0, -2}},
    {13, {1, -2, -1, 2, 1, 2, -2, 0, -2}},
    {16, {1, -2, 0, 0, 2, 0, 0, 0, -1}},
    {18, {1, -2, 0, 1, 0, 0, 1, 0, 0}},
    {25, {1, -1, -1, 0, 0, 1, 0, 1, 0}},
};

TEST_CASE("eta-quotient hauptmodul expansions match the frozen table") {
    for (const auto& row : kExpansions) {
        Series t = hauptmodul_series(row.level, 7);
        CHECK(t.denom() == 1);
        CHECK(t.min_exp() == -1);
        for (long e = -1; e <= 7; ++e) {
            INFO("level ", row.level, " exponent ", e);
            CHECK(t.coeff(e) == row.coeff[e + 1]);
        }
    }
}

TEST_CASE("level one expands the classical j-invariant") {
    Series j = j_series(4);
    CHECK(j.coeff(-1) == 1);
    CHECK(j.coeff(0) == 744);
    CHECK(j.coeff(1) == 196884);
    CHECK(j.coeff(2) == 21493760);
    CHECK(j.coeff(3) == Int("864299970"));
    CHECK(j.coeff(4) == Int("20245856256"));

    Series t = hauptmodul_series(1, 2);
    CHECK(t.coeff(1) == 196884);
}

TEST_CASE("requested order bounds the window exactly") {
    Series t = hauptmodul_series(5, 0);
    CHECK(t.coeff(-1) == 1);
    CHECK(t.coeff(0) == -6);
    CHECK(t.trunc() == 1);
    CHECK_THROWS_AS(t.coeff(1), PrecisionError);
}
