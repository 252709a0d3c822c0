#pragma once

#include <string>
#include <vector>

#include "modcorr/numeric.hpp"

namespace modcorr {

/* Positive definite binary quadratic form A x^2 + B xy + C y^2 with
   determinant convention det = 4AC - B^2 > 0. */
struct QForm {
    long long A = 1, B = 0, C = 1;
    bool operator==(const QForm& o) const { return A == o.A && B == o.B && C == o.C; }
    bool operator<(const QForm& o) const {
        if (A != o.A) return A < o.A;
        if (B != o.B) return B < o.B;
        return C < o.C;
    }
};

/* Row of SL2(Z): (a, b; c, d), det = 1. */
struct Mat2 {
    long long a = 1, b = 0, c = 0, d = 1;
    bool operator==(const Mat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

long long det_form(const QForm& f);
bool is_positive_definite(const QForm& f);
long long content(const QForm& f);

Mat2 mat_mul(const Mat2& g, const Mat2& h);
Mat2 mat_inverse(const Mat2& g);

/* Substitution (x, y) -> (a x + b y, c x + d y); the right action
   compatible with mat_mul: apply(f, g h) = apply(apply(f, g), h). */
QForm apply(const QForm& f, const Mat2& g);

/* Gauss reduction to the unique representative with -A < B <= A <= C
   and B >= 0 when A = C. */
QForm reduce_form(const QForm& f);
/* Also reports U with apply(f, U) reduced. */
std::pair<QForm, Mat2> reduce_form_transform(const QForm& f);
bool is_reduced(const QForm& f);

/* All reduced forms of determinant D, sorted; empty for D = 1,2 mod 4. */
std::vector<QForm> reduced_forms(long long D, bool primitive_only = false);

/* Class-count weight: 1/2 or 1/3 when the primitive part reduces to
   x^2 + y^2 or x^2 + xy + y^2, else 1. */
Rat form_weight(const QForm& f);

/* Weighted count of primitive reduced forms of determinant D. */
Rat primitive_h(long long D);

/* Hurwitz class number: weighted count over all reduced forms of
   determinant D; equals sum of primitive_h(D/f^2) over f^2 | D. */
Rat hurwitz_H(long long D);

/* #{h mod 2p : h^2 = -D mod 4p}; requires D = 0 or 3 mod 4. */
int n_sqrt_count(long long p, long long D);

/* Splits -D = f^2 dK with dK the fundamental discriminant of
   Q(sqrt(-D)).  For D = 1,2 mod 4 no integer f exists; the returned f
   then satisfies -4D = f^2 dK (the lattice Z[sqrt(-D)]) so dK is still
   the field discriminant. */
std::pair<long long, long long> fundamental_disc(long long D);

/* Kronecker symbol (dK | p) of the field Q(sqrt(-D)). */
int chi(long long D, long long p);

/* Class number attached to Gamma_0(p): n_sqrt_count(p, D) * (H(D)
   + p H(D/p^2)), the second term present only when p^2 | D. */
Rat HM_prime(long long p, long long D);

/* Finite SL2(Z) stabilizer of f modulo nothing: the full automorph
   list, of size 2, 4 or 6 (always including +-I). */
std::vector<Mat2> automorphs(const QForm& f);

/* Half the number of automorphs with lower-left entry = 0 mod M;
   values 1, 2, 3. */
int stabilizer_index(long long M, const QForm& f);

/* Gamma_0(M) class count of forms [M a, b, c] of determinant D as a
   weighted orbit sum, computed by breadth-first closure inside a box
   that grows until the value repeats over two consecutive growth
   steps.  Experimental search, usable at small D; max_box = 0 picks a
   budget from D. */
Rat HM_orbit(long long M, long long D, long long max_box = 0);

/* HM_prime(p, D) / H(D); requires H(D) != 0.  Cross-checked against
   the closed form in chi and the conductor valuation of p. */
Rat Ap(long long p, long long D);

/* H(D/p^2) / H(D) for p^2 | D, by enumeration, cross-checked against
   the same closed form. */
Rat class_ratio(long long p, long long D);

struct ScalingBijectionReport {
    long long e = 0, D = 0, M = 0, bound = 0;
    std::size_t set1_size = 0, set2_size = 0;
    std::vector<std::string> violations;
    bool verified() const { return violations.empty(); }
};

/* Materializes, inside a coefficient box, the two families
     S1 = {(d, [a,b,c] primitive, Z) : d^2 | D, Z | (e, d),
           (M/(a,M))^2 (4ac - b^2) = D/d^2}
     S2 = {([Ma', b, c], Z) : Z | e, Z^2 | D, det = D/Z^2}
   maps S1 -> S2 by scaling with (M/(a,M)) d/Z, maps back via the
   content, and reports every element that fails to round-trip. */
ScalingBijectionReport scaling_bijection_check(long long e, long long D, long long M, long long bound = 32);

}  // namespace modcorr
