#include <doctest.h>

#include <map>

#include "modcorr/bipoly.hpp"
#include "modcorr/eta.hpp"
#include "modcorr/modpoly.hpp"
#include "modcorr/refdata.hpp"

using namespace modcorr;

namespace {

bool has_rep(const std::vector<UTRep>& reps, long a, long b, long d) {
    for (const UTRep& r : reps)
        if (r.a == a && r.b == b && r.d == d) return true;
    return false;
}

}  // namespace

TEST_CASE("upper-triangular representatives of a given determinant") {
    std::vector<UTRep> r2 = matrix_reps(2, false);
    REQUIRE(r2.size() == 3);
    CHECK(has_rep(r2, 1, 0, 2));
    CHECK(has_rep(r2, 1, 1, 2));
    CHECK(has_rep(r2, 2, 0, 1));

    std::vector<UTRep> r4 = matrix_reps(4, true);
    CHECK(r4.size() == 6);
    CHECK_FALSE(has_rep(r4, 2, 0, 2));
    CHECK(has_rep(r4, 2, 1, 2));
    CHECK(matrix_reps(4, false).size() == 7);

    CHECK(matrix_reps(6, true).size() == 12);
    CHECK(matrix_reps(1, true).size() == 1);
    CHECK_THROWS_AS(matrix_reps(0, true), DomainError);
}

TEST_CASE("index of the determinant-N correspondence") {
    CHECK(index_gamma0(1) == 1);
    CHECK(index_gamma0(2) == 3);
    CHECK(index_gamma0(4) == 6);
    CHECK(index_gamma0(12) == 24);
    CHECK(index_gamma0(13) == 14);
    for (long p : {2L, 3L, 5L, 7L, 13L}) CHECK(index_gamma0(p) == p + 1);
    CHECK(static_cast<std::size_t>(index_gamma0(6)) == matrix_reps(6, true).size());
    CHECK_THROWS_AS(index_gamma0(0), DomainError);
}

TEST_CASE("series precision budget for the conjugate product") {
    CHECK(required_truncation(3, 2, 8) == 22);
    CHECK(required_truncation(5, 3, 8) == 36);
    CHECK_THROWS_AS(required_truncation(6, 2, 8), DomainError);  /* shared factor */
    CHECK_THROWS_AS(required_truncation(11, 2, 8), DomainError); /* no hauptmodul */
    CHECK_THROWS_AS(required_truncation(3, 2, 0), DomainError);
}

TEST_CASE("pole reduction recovers polynomials in the hauptmodul") {
    Series t = hauptmodul_series(5, 40);

    std::map<long, Int> p = pole_reduce(t, t, 8);
    CHECK(p.size() == 1);
    CHECK(p.at(1) == 1);

    std::map<long, Int> c = pole_reduce(Series::monomial(Int(5), 0), t, 8);
    CHECK(c.size() == 1);
    CHECK(c.at(0) == 5);

    /* round trip t^2 - 7t + 3 */
    Series k = t * t - Series::monomial(Int(7), 0) * t + Series::monomial(Int(3), 0);
    std::map<long, Int> q = pole_reduce(k, t, 8);
    REQUIRE(q.size() == 3);
    CHECK(q.at(2) == 1);
    CHECK(q.at(1) == -7);
    CHECK(q.at(0) == 3);
}

TEST_CASE("pole reduction rejects series outside the polynomial ring") {
    Series t = hauptmodul_series(5, 40);
    /* the bare pole q^{-1} differs from t by a nonzero tail */
    CHECK_THROWS_AS(pole_reduce(Series::monomial(Int(1), -1), t, 8), DomainError);
    /* expansions must start at q^{-1} with unit coefficient */
    CHECK_THROWS_AS(pole_reduce(t, Series::monomial(Int(2), -1), 8), DomainError);
    /* window too short to certify */
    Series short_t = hauptmodul_series(5, 2);
    CHECK_THROWS_AS(pole_reduce(short_t, short_t, 8), PrecisionError);
}

TEST_CASE("determinant one gives the diagonal X - Y") {
    for (long level : {2L, 9L, 25L}) {
        ModPoly p = psi_polynomial(level, 1);
        CHECK(p.terms.size() == 2);
        CHECK(p.coeff(1, 0) == 1);
        CHECK(p.coeff(0, 1) == -1);
    }
}

TEST_CASE("primitive modular polynomials reproduce the frozen reference rows") {
    for (auto [level, n] : reference_rows()) {
        ModPoly computed = psi_polynomial(level, n);
        ModPoly expected = reference_psi(level, n);
        INFO("level ", level, " determinant ", n);
        CHECK(computed.terms == expected.terms);
        CHECK(computed.degree_x() == index_gamma0(n));
    }
}

TEST_CASE("reported coefficients are independent of the guard width") {
    ModPoly a = psi_polynomial(3, 2, 8);
    ModPoly b = psi_polynomial(3, 2, 16);
    CHECK(a.terms == b.terms);
}

TEST_CASE("invalid jobs are rejected up front") {
    CHECK_THROWS_AS(psi_polynomial(6, 2), DomainError);
    CHECK_THROWS_AS(psi_polynomial(11, 2), DomainError);
    CHECK_THROWS_AS(psi_polynomial(3, 0), DomainError);
}

TEST_CASE("full modular polynomial factors over square divisors") {
    ModPoly phi6 = phi_polynomial(5, 6);
    ModPoly psi6 = psi_polynomial(5, 6);
    CHECK(phi6.terms == psi6.terms); /* squarefree N */

    BiPoly phi4 = bipoly_from_modpoly(phi_polynomial(3, 4));
    BiPoly prod = bipoly_from_modpoly(psi_polynomial(3, 4)) *
                  bipoly_from_modpoly(psi_polynomial(3, 1));
    CHECK(phi4 == prod);

    CHECK(phi_polynomial(1, 4).degree_x() == 7); /* index 6 + index 1 */
}
