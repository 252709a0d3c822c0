#include "modcorr/intersect.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "modcorr/errors.hpp"
#include "modcorr/eta.hpp"
#include "modcorr/quadforms.hpp"

namespace modcorr {

namespace {

void require_job(long long M, long long N1, long long N2) {
    if (N1 < 1 || N2 < 1) throw DomainError("correspondence indices must be positive");
    if (M < 1) throw DomainError("level must be positive");
    if (std::gcd(N1, M) != 1 || std::gcd(N2, M) != 1)
        throw DomainError("correspondence indices must be coprime to the level");
}

void require_proper(long long M, long long N1, long long N2) {
    require_job(M, N1, N2);
    if (is_square(int_of(N1) * int_of(N2)))
        throw DomainError("non-proper: N1*N2 is a square");
}

long long isqrt_ll(long long n) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

Int to_integer(const Rat& v, const std::string& what) {
    Rat c = v;
    c.canonicalize();
    if (c.get_den() != 1) throw IntegrityError(what + " came out non-integral");
    return c.get_num();
}

/* sum over t^2 < 4 N1 N2 of the inner divisor sum with a caller-chosen
   class value at each determinant */
template <class ClassFn>
Rat diagonal_sum(long long N1, long long N2, ClassFn&& value) {
    Rat total(0);
    long long s = isqrt_ll(4 * N1 * N2);
    for (long long t = -s; t <= s; ++t) {
        long long d0 = 4 * N1 * N2 - t * t;
        if (d0 <= 0) continue;
        long long g = std::gcd(std::gcd(N1, N2), std::llabs(t));
        for (long long d = 1; d <= g; ++d) {
            if (g % d) continue;
            total += rat_of(d) * value(d0 / (d * d));
        }
    }
    return total;
}

}  // namespace

bool is_proper(long long M, long long N1, long long N2) {
    require_job(M, N1, N2);
    return !is_square(int_of(N1) * int_of(N2));
}

Int intersection_hurwitz(long long N1, long long N2) {
    require_proper(1, N1, N2);
    Rat total = diagonal_sum(N1, N2, [](long long d) { return hurwitz_H(d); });
    return to_integer(total, "level-one intersection number");
}

Int intersection_gamma0(long long M, long long N1, long long N2) {
    require_proper(M, N1, N2);
    if (M == 1) return intersection_hurwitz(N1, N2);
    if (!hauptmodul_supported(M))
        throw DomainError("no genus-zero model at level " + std::to_string(M));
    Rat total;
    if (is_small_prime(M)) {
        total = diagonal_sum(N1, N2, [&](long long d) { return HM_prime(M, d); });
    } else {
        /* experimental: composite levels go through the orbit search */
        total = diagonal_sum(N1, N2, [&](long long d) { return HM_orbit(M, d); });
    }
    return to_integer(total, "level-" + std::to_string(M) + " intersection number");
}

Int intersection_gamma0_Ap(long long p, long long N1, long long N2) {
    require_proper(p, N1, N2);
    if (!is_small_prime(p) || !hauptmodul_supported(p))
        throw DomainError("this route needs a genus-zero prime level");
    Rat total(0);
    long long s = isqrt_ll(4 * N1 * N2);
    for (long long x = -s; x <= s; ++x) {
        long long d0 = 4 * N1 * N2 - x * x;
        if (d0 <= 0) continue;
        long long g = std::gcd(std::gcd(N1, N2), std::llabs(x));
        Rat inner(0);
        for (long long d = 1; d <= g; ++d) {
            if (g % d) continue;
            inner += rat_of(d) * hurwitz_H(d0 / (d * d));
        }
        if (inner != 0) total += Ap(p, d0) * inner;
    }
    return to_integer(total, "correction-factor intersection number");
}

Int eisenstein_C(const HalfIntT& t) {
    if (t.N1 < 1 || t.N2 < 1 || t.det2() <= 0)
        throw DomainError("matrix must be positive definite");
    long long g = std::gcd(std::gcd(t.N1, t.N2), std::llabs(t.x));
    Rat total(0);
    for (long long d = 1; d <= g; ++d) {
        if (g % d) continue;
        total += rat_of(d) * hurwitz_H(t.det2() / (d * d));
    }
    return to_integer(Rat(288) * total, "Eisenstein coefficient");
}

Int intersection_eisenstein(long long p, long long N1, long long N2) {
    require_proper(p, N1, N2);
    if (!is_small_prime(p) || !hauptmodul_supported(p))
        throw DomainError("this route needs a genus-zero prime level");
    Rat total(0);
    long long s = isqrt_ll(4 * N1 * N2);
    for (long long x = -s; x <= s; ++x) {
        HalfIntT t{N1, N2, x};
        if (t.det2() <= 0) continue;
        Int c = eisenstein_C(t);
        if (c != 0) total += Ap(p, t.det2()) * Rat(c);
    }
    Int value = to_integer(total / Rat(288), "Eisenstein-route intersection number");
    if (value != intersection_gamma0_Ap(p, N1, N2))
        throw IntegrityError("Eisenstein route disagrees with the correction-factor route");
    return value;
}

}  // namespace modcorr
