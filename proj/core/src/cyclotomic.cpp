#include "modcorr/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "modcorr/errors.hpp"

namespace modcorr {

namespace {

/* Exact division of polynomials over Z, constant term first.
   Caller guarantees the division is exact and the divisor monic. */
std::vector<Int> poly_divexact(std::vector<Int> num, const std::vector<Int>& den) {
    std::size_t dn = num.size() - 1, dd = den.size() - 1;
    std::vector<Int> quot(dn - dd + 1);
    for (std::size_t k = dn - dd + 1; k-- > 0;) {
        Int c = num[k + dd];
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= dd; ++i)
            num[k + i] -= c * den[i];
    }
    return quot;
}

/* Phi_N as x^N - 1 divided by the cyclotomic polynomials of all proper
   divisors of N. */
std::vector<Int> cyclotomic_polynomial(unsigned n) {
    if (n == 1) return {-1, 1};
    std::vector<Int> acc(n + 1);
    acc[0] = -1;
    acc[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d) continue;
        acc = poly_divexact(std::move(acc), cyclotomic_polynomial(d));
    }
    return acc;
}

}  // namespace

CyclotomicRing::CyclotomicRing(unsigned level) : level_(level) {
    minpoly_ = cyclotomic_polynomial(level);
    degree_ = static_cast<unsigned>(minpoly_.size() - 1);
    /* zeta^j by repeated multiplication with x, reducing the overflow
       degree via x^deg = -(lower part of Phi_N) */
    zeta_pow_.reserve(level);
    std::vector<Int> cur(degree_);
    cur[0] = 1;
    for (unsigned j = 0; j < level; ++j) {
        zeta_pow_.push_back(cur);
        std::vector<Int> nxt(degree_);
        Int lead = cur[degree_ - 1];
        for (unsigned k = degree_ - 1; k > 0; --k) nxt[k] = cur[k - 1];
        nxt[0] = 0;
        if (lead != 0)
            for (unsigned k = 0; k < degree_; ++k) nxt[k] -= lead * minpoly_[k];
        cur = std::move(nxt);
    }
}

const CyclotomicRing& CyclotomicRing::get(unsigned level) {
    static std::mutex mtx;
    static std::map<unsigned, std::unique_ptr<CyclotomicRing>> registry;
    if (level == 0) throw DomainError("cyclotomic level must be positive");
    std::lock_guard<std::mutex> lock(mtx);
    auto it = registry.find(level);
    if (it == registry.end())
        it = registry.emplace(level, std::unique_ptr<CyclotomicRing>(new CyclotomicRing(level))).first;
    return *it->second;
}

CycInt CycInt::zeta_multiple(const CyclotomicRing& ring, long power, const Int& value) {
    CycInt r(ring);
    const auto& row = ring.zeta_power(power);
    for (std::size_t i = 0; i < row.size(); ++i) r.c_[i] = value * row[i];
    return r;
}

bool CycInt::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycInt::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    if (ring_ != o.ring_) throw IntegrityError("cyclotomic level mismatch in addition");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    if (ring_ != o.ring_) throw IntegrityError("cyclotomic level mismatch in subtraction");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycInt CycInt::operator-() const {
    CycInt r(*ring_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    if (ring_ != o.ring_) throw IntegrityError("cyclotomic level mismatch in multiplication");
    unsigned deg = ring_->degree();
    /* schoolbook convolution, then fold powers >= deg back with the
       zeta-power table (zeta^p = zeta^{p mod N}, p < 2N here) */
    std::vector<Int> prod(2 * deg - 1);
    for (unsigned i = 0; i < deg; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; j < deg; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    CycInt r(*ring_);
    for (unsigned p = 0; p < 2 * deg - 1; ++p) {
        if (prod[p] == 0) continue;
        if (p < deg) {
            r.c_[p] += prod[p];
        } else {
            const auto& row = ring_->zeta_power(static_cast<long>(p));
            for (unsigned k = 0; k < deg; ++k) r.c_[k] += prod[p] * row[k];
        }
    }
    return r;
}

CycInt& CycInt::operator*=(const Int& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

CycInt CycInt::galois(long s) const {
    CycInt r(*ring_);
    unsigned deg = ring_->degree();
    for (unsigned j = 0; j < deg; ++j) {
        if (c_[j] == 0) continue;
        const auto& row = ring_->zeta_power(static_cast<long>(j) * s);
        for (unsigned k = 0; k < deg; ++k) r.c_[k] += c_[j] * row[k];
    }
    return r;
}

}  // namespace modcorr
