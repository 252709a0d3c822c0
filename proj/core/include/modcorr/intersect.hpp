#pragma once

#include "modcorr/numeric.hpp"

namespace modcorr {

/* Half-integral symmetric matrix with diagonal (N1, N2) and
   off-diagonal x/2; positive definite iff x^2 < 4 N1 N2. */
struct HalfIntT {
    long long N1 = 1, N2 = 1, x = 0;
    long long det2() const { return 4 * N1 * N2 - x * x; }
};

/* The two correspondences meet properly iff N1 N2 is not a perfect
   square; requires gcd(N1, M) = gcd(N2, M) = 1. */
bool is_proper(long long M, long long N1, long long N2);

/* Level-one intersection number:
   sum_{t^2 < 4 N1 N2} sum_{d | (N1, N2, t)} d H((4 N1 N2 - t^2)/d^2). */
Int intersection_hurwitz(long long N1, long long N2);

/* Same shape with the level-M class number in place of H: HM_prime for
   prime M, hurwitz_H for M = 1, and the experimental orbit count for
   composite genus-zero M. */
Int intersection_gamma0(long long M, long long N1, long long N2);

/* Prime-level route through the correction factor:
   sum_x Ap(p, 4 N1 N2 - x^2) sum_{d | (N1,N2,x)} d H(.../d^2);
   vanishing inner sums are skipped without touching Ap. */
Int intersection_gamma0_Ap(long long p, long long N1, long long N2);

/* Fourier coefficient of the weight-2 degree-2 Eisenstein series:
   288 sum_{d | gcd(N1,N2,x)} d H(det2 / d^2). */
Int eisenstein_C(const HalfIntT& t);

/* (1/288) sum_x Ap(p, det2) C(T); checked against the Ap route. */
Int intersection_eisenstein(long long p, long long N1, long long N2);

}  // namespace modcorr
