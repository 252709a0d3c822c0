#pragma once

#include <vector>

#include "modcorr/numeric.hpp"

namespace modcorr {

/* Arithmetic context for Z[zeta_N] in the power basis 1, zeta, ...,
   zeta^{phi(N)-1} modulo the N-th cyclotomic polynomial.  Instances are
   interned per level and live for the whole process, so raw pointers to
   them may be cached freely. */
class CyclotomicRing {
public:
    static const CyclotomicRing& get(unsigned level);

    unsigned level() const { return level_; }
    unsigned degree() const { return degree_; }

    /* Power-basis coordinates of zeta^j for any j (reduced mod level). */
    const std::vector<Int>& zeta_power(long j) const {
        long r = j % static_cast<long>(level_);
        if (r < 0) r += level_;
        return zeta_pow_[static_cast<std::size_t>(r)];
    }

    /* Coefficients of the minimal polynomial, constant term first,
       monic of degree phi(N). */
    const std::vector<Int>& minimal_polynomial() const { return minpoly_; }

private:
    explicit CyclotomicRing(unsigned level);

    unsigned level_;
    unsigned degree_;
    std::vector<Int> minpoly_;
    std::vector<std::vector<Int>> zeta_pow_;
};

/* Element of Z[zeta_N].  Level 1 degenerates to plain integers.
   All binary operations require matching levels; series code embeds
   everything at one ambient level up front. */
class CycInt {
public:
    CycInt() : ring_(&CyclotomicRing::get(1)), c_(1) {}
    explicit CycInt(const CyclotomicRing& ring)
        : ring_(&ring), c_(ring.degree()) {}
    CycInt(const CyclotomicRing& ring, const Int& rational)
        : ring_(&ring), c_(ring.degree()) {
        c_[0] = rational;
    }
    /* value * zeta^power at the given ring */
    static CycInt zeta_multiple(const CyclotomicRing& ring, long power, const Int& value);

    unsigned level() const { return ring_->level(); }
    const CyclotomicRing& ring() const { return *ring_; }
    const std::vector<Int>& coords() const { return c_; }

    bool is_zero() const;
    /* true when every coordinate above the constant one vanishes */
    bool is_rational() const;
    const Int& rational_part() const { return c_[0]; }

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt& operator*=(const Int& s);
    bool operator==(const CycInt& o) const { return ring_ == o.ring_ && c_ == o.c_; }

    /* Galois action zeta -> zeta^s; requires gcd(s, level) = 1. */
    CycInt galois(long s) const;

private:
    const CyclotomicRing* ring_;
    std::vector<Int> c_;
};

}  // namespace modcorr
