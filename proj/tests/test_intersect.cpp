#include <doctest.h>

#include "modcorr/errors.hpp"
#include "modcorr/intersect.hpp"

using namespace modcorr;

TEST_CASE("properness predicate and its preconditions") {
    CHECK(is_proper(1, 2, 3));
    CHECK(is_proper(5, 2, 3));
    CHECK_FALSE(is_proper(1, 2, 8));
    CHECK_FALSE(is_proper(1, 1, 4));
    CHECK_FALSE(is_proper(3, 7, 7));
    CHECK_THROWS_AS(is_proper(2, 2, 3), DomainError);
    CHECK_THROWS_AS(is_proper(3, 2, 6), DomainError);
    CHECK_THROWS_AS(is_proper(1, 0, 3), DomainError);
}

TEST_CASE("level-one intersection numbers by direct class-number sums") {
    /* 2 H(4) + 2 H(7) + H(8) = 1 + 2 + 1 */
    CHECK(intersection_hurwitz(1, 2) == 4);
    /* H(24) + 2 H(23) + 2 H(20) + 2 H(15) + 2 H(8) = 2 + 6 + 4 + 4 + 2 */
    CHECK(intersection_hurwitz(2, 3) == 18);
    CHECK(intersection_hurwitz(3, 2) == 18);
    CHECK_THROWS_AS(intersection_hurwitz(2, 8), DomainError);
}

TEST_CASE("higher-level intersection numbers, hand-checked") {
    CHECK(intersection_gamma0(1, 2, 3) == 18);
    CHECK(intersection_gamma0(5, 2, 3) == 12);
    /* x = +-2 hits determinant 36 where the p^2 | D correction enters:
       HM(3,36) = H(36) + 3 H(4) = 5/2 + 3/2 = 4; in total
       2 HM(3,39) + 2 HM(3,36) + 2 HM(3,24) + 2 HM(3,15) = 8 + 8 + 4 + 4 */
    CHECK(intersection_gamma0(3, 2, 5) == 24);
    CHECK_THROWS_AS(intersection_gamma0(11, 2, 3), DomainError);
    CHECK_THROWS_AS(intersection_gamma0(5, 5, 3), DomainError);
}

TEST_CASE("the three prime-level routes agree on hand-checked values") {
    /* A_2(60) H(60) + 2 A_2(56) H(56) + 2 A_2(44) H(44) + 2 A_2(24) H(24)
       = 8 + 8 + 12 + 4; odd x drop out since -D is a non-square mod 8 */
    CHECK(intersection_gamma0(2, 3, 5) == 32);
    CHECK(intersection_gamma0_Ap(2, 3, 5) == 32);
    CHECK(intersection_eisenstein(2, 3, 5) == 32);

    CHECK(intersection_gamma0_Ap(5, 2, 3) == 12);
    CHECK(intersection_eisenstein(5, 2, 3) == 12);

    CHECK_THROWS_AS(intersection_gamma0_Ap(4, 3, 5), DomainError);
    CHECK_THROWS_AS(intersection_eisenstein(11, 2, 3), DomainError);
}

TEST_CASE("degree-two Eisenstein coefficients") {
    CHECK(eisenstein_C(HalfIntT{1, 1, 1}) == 96);
    CHECK(eisenstein_C(HalfIntT{1, 1, 0}) == 144);
    CHECK(eisenstein_C(HalfIntT{2, 3, 1}) == 864);
    /* gcd 2: 288 (H(12) + 2 H(3)) = 288 * 2 */
    CHECK(eisenstein_C(HalfIntT{2, 2, 2}) == 576);
    CHECK(HalfIntT{2, 3, 1}.det2() == 23);
    CHECK_THROWS_AS(eisenstein_C(HalfIntT{1, 1, 2}), DomainError);
    CHECK_THROWS_AS(eisenstein_C(HalfIntT{-1, 1, 0}), DomainError);
}
