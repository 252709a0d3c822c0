#include "modcorr/bipoly.hpp"

#include <algorithm>

#include "modcorr/errors.hpp"

namespace modcorr {

long BiPoly::degree(int var) const {
    long d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, m[static_cast<std::size_t>(var)]);
    return d;
}

long BiPoly::total_degree() const {
    long d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, m[0] + m[1] + m[2]);
    return d;
}

void BiPoly::insert(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rat BiPoly::coeff(const Mono& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Rat(0) : it->second;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
    Rat total(0);
    for (const auto& [m, c] : terms) {
        if (m[2] != 0) throw DomainError("two-variable evaluation of a three-variable polynomial");
        Rat term = c;
        for (long i = 0; i < m[0]; ++i) term *= x;
        for (long i = 0; i < m[1]; ++i) term *= y;
        total += term;
    }
    return total;
}

BiPoly bipoly_from_modpoly(const ModPoly& p) {
    BiPoly out;
    out.nvars = 2;
    for (const auto& [ij, c] : p.terms) out.insert({ij.first, ij.second, 0}, Rat(c));
    return out;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    out.nvars = std::max(a.nvars, b.nvars);
    out.terms = a.terms;
    for (const auto& [m, c] : b.terms) out.insert(m, c);
    return out;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    out.nvars = std::max(a.nvars, b.nvars);
    out.terms = a.terms;
    for (const auto& [m, c] : b.terms) out.insert(m, -c);
    return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    out.nvars = std::max(a.nvars, b.nvars);
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms)
            out.insert({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    return out;
}

/* ---- dense arithmetic over Z[x], ascending coefficients ---- */

namespace {

using ZPoly = std::vector<Int>;

void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zp_deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zp_trim(r);
    return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zp_trim(r);
    return r;
}

ZPoly zp_pow(const ZPoly& a, long e) {
    ZPoly r{Int(1)};
    for (long i = 0; i < e; ++i) r = zp_mul(r, a);
    return r;
}

/* exact division; the divisor is known to divide the dividend */
ZPoly zp_exact_div(const ZPoly& num, const ZPoly& den) {
    if (den.empty()) throw IntegrityError("exact polynomial division by zero");
    if (num.empty()) return {};
    if (num.size() < den.size())
        throw IntegrityError("exact polynomial division with smaller dividend");
    ZPoly rem = num;
    ZPoly quot(num.size() - den.size() + 1, Int(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        std::size_t top = k + den.size() - 1;
        if (rem.size() <= top || rem[top] == 0) continue;
        if (rem[top] % den.back() != 0)
            throw IntegrityError("polynomial division expected to be exact is not");
        Int q = rem[top] / den.back();
        quot[k] = q;
        for (std::size_t i = 0; i < den.size(); ++i) rem[k + i] -= q * den[i];
    }
    zp_trim(rem);
    if (!rem.empty()) throw IntegrityError("polynomial division expected to be exact is not");
    zp_trim(quot);
    return quot;
}

Int zp_content(const ZPoly& p) {
    Int g(0);
    for (const Int& c : p) g = gcd(g, c);
    return g;
}

/* primitive part with positive leading coefficient */
ZPoly zp_primitive(const ZPoly& p) {
    if (p.empty()) return {};
    Int g = zp_content(p);
    if (p.back() < 0) g = -g;
    ZPoly r = p;
    for (Int& c : r) c = divexact(c, g);
    return r;
}

/* gcd in Z[x] by the primitive remainder sequence */
ZPoly zp_gcd(ZPoly a, ZPoly b) {
    if (a.empty()) return zp_primitive(b);
    if (b.empty()) return zp_primitive(a);
    Int cont = gcd(zp_content(a), zp_content(b));
    a = zp_primitive(a);
    b = zp_primitive(b);
    if (zp_deg(a) < zp_deg(b)) std::swap(a, b);
    while (!b.empty()) {
        if (zp_deg(b) == 0) {
            a = {Int(1)};
            break;
        }
        /* pseudo-remainder lc(b)^{delta+1} a mod b */
        ZPoly r = a;
        long e = zp_deg(a) - zp_deg(b) + 1;
        while (!r.empty() && zp_deg(r) >= zp_deg(b)) {
            std::size_t shift = static_cast<std::size_t>(zp_deg(r) - zp_deg(b));
            Int lr = r.back();
            ZPoly scaled = r;
            for (Int& c : scaled) c *= b.back();
            ZPoly sub(shift, Int(0));
            for (const Int& c : b) sub.push_back(lr * c);
            r = zp_sub(scaled, sub);
            --e;
        }
        while (e-- > 0)
            for (Int& c : r) c *= b.back();
        a = b;
        b = zp_primitive(r);
    }
    ZPoly g = zp_primitive(a);
    for (Int& c : g) c *= cont;
    return g;
}

/* ---- polynomials in a main variable with Z[x] coefficients ---- */

using ZBi = std::vector<ZPoly>;

void zbi_trim(ZBi& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

int zbi_deg(const ZBi& p) { return static_cast<int>(p.size()) - 1; }

ZBi zbi_scale(const ZBi& p, const ZPoly& s) {
    ZBi r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = zp_mul(p[i], s);
    zbi_trim(r);
    return r;
}

ZBi zbi_sub(const ZBi& a, const ZBi& b) {
    ZBi r = a;
    if (b.size() > r.size()) r.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = zp_sub(r[i], b[i]);
    zbi_trim(r);
    return r;
}

ZBi zbi_exact_div(const ZBi& p, const ZPoly& den) {
    ZBi r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i].empty() ? ZPoly{} : zp_exact_div(p[i], den);
    zbi_trim(r);
    return r;
}

ZPoly zbi_content(const ZBi& p) {
    ZPoly g;
    for (const ZPoly& c : p) g = zp_gcd(g, c);
    return g;
}

/* pseudo-remainder: lc(B)^{degA-degB+1} A = Q B + R with deg R < deg B */
ZBi zbi_prem(ZBi a, const ZBi& b) {
    long e = zbi_deg(a) - zbi_deg(b) + 1;
    const ZPoly& lb = b.back();
    while (!a.empty() && zbi_deg(a) >= zbi_deg(b)) {
        std::size_t shift = static_cast<std::size_t>(zbi_deg(a) - zbi_deg(b));
        ZPoly la = a.back();
        ZBi scaled = zbi_scale(a, lb);
        ZBi sub(shift);
        for (const ZPoly& c : b) sub.push_back(zp_mul(la, c));
        a = zbi_sub(scaled, sub);
        --e;
    }
    while (e-- > 0) a = zbi_scale(a, lb);
    return a;
}

/* BiPoly -> main-variable layout; returns the integer scale L with
   layout = L * input */
std::pair<ZBi, Int> to_zbi(const BiPoly& p, int main_var) {
    Int scale(1);
    for (const auto& [m, c] : p.terms) scale = lcm(scale, Rat(c).get_den());
    ZBi out;
    int other = 1 - main_var;
    for (const auto& [m, c] : p.terms) {
        if (m[2] != 0) throw DomainError("resultant and gcd operate on two variables");
        std::size_t i = static_cast<std::size_t>(m[static_cast<std::size_t>(main_var)]);
        std::size_t j = static_cast<std::size_t>(m[static_cast<std::size_t>(other)]);
        if (out.size() <= i) out.resize(i + 1);
        if (out[i].size() <= j) out[i].resize(j + 1, Int(0));
        Rat v = c * Rat(scale);
        v.canonicalize();
        out[i][j] += v.get_num();
    }
    for (ZPoly& c : out) zp_trim(c);
    zbi_trim(out);
    return {out, scale};
}

BiPoly from_zbi(const ZBi& p, int main_var) {
    BiPoly out;
    out.nvars = 2;
    int other = 1 - main_var;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p[i].size(); ++j) {
            if (p[i][j] == 0) continue;
            Mono m{0, 0, 0};
            m[static_cast<std::size_t>(main_var)] = static_cast<long>(i);
            m[static_cast<std::size_t>(other)] = static_cast<long>(j);
            out.insert(m, Rat(p[i][j]));
        }
    }
    return out;
}

/* resultant of A and B with respect to the main variable, by the
   subresultant remainder sequence (divisions are exact throughout) */
ZPoly subres_resultant(ZBi a, ZBi b) {
    int sign = 1;
    if (zbi_deg(a) < zbi_deg(b)) {
        if ((zbi_deg(a) & 1) && (zbi_deg(b) & 1)) sign = -sign;
        std::swap(a, b);
    }
    ZPoly g{Int(1)}, h{Int(1)};
    for (;;) {
        int m = zbi_deg(a), n = zbi_deg(b);
        if (n < 0) return {};
        if (n == 0) {
            ZPoly num = zp_pow(b[0], m);
            ZPoly den = zp_pow(h, m > 0 ? m - 1 : 0);
            ZPoly res = zp_exact_div(num, den);
            if (sign < 0)
                for (Int& c : res) c = -c;
            return res;
        }
        long delta = m - n;
        if ((m & 1) && (n & 1)) sign = -sign;
        ZBi r = zbi_prem(a, b);
        a = b;
        b = zbi_exact_div(r, zp_mul(g, zp_pow(h, delta)));
        g = a.back();
        h = delta == 0 ? h : zp_exact_div(zp_pow(g, delta), zp_pow(h, delta - 1));
    }
}

/* coprimality certificate over GF(p) at X = x0, p = 2^61 - 1: a common
   divisor of two Y-primitive polynomials is either 1 or has positive
   Y-degree, and it keeps that Y-degree under the specialization whenever a
   leading Y-coefficient stays nonzero; a constant specialized gcd therefore
   certifies that the primitive gcd is 1 */
constexpr unsigned long kCertPrime = 2305843009213693951ul;

unsigned long modp_mul(unsigned long a, unsigned long b) {
    return static_cast<unsigned long>(static_cast<unsigned __int128>(a) * b % kCertPrime);
}

unsigned long modp_sub(unsigned long a, unsigned long b) {
    return a >= b ? a - b : a + (kCertPrime - b);
}

unsigned long modp_pow(unsigned long a, unsigned long e) {
    unsigned long r = 1;
    for (; e; e >>= 1, a = modp_mul(a, a))
        if (e & 1) r = modp_mul(r, a);
    return r;
}

std::vector<unsigned long> modp_specialize(const ZBi& f, unsigned long x0) {
    std::vector<unsigned long> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        unsigned long v = 0;
        for (std::size_t j = f[i].size(); j-- > 0;) {
            v = modp_mul(v, x0) + mpz_fdiv_ui(f[i][j].get_mpz_t(), kCertPrime);
            if (v >= kCertPrime) v -= kCertPrime;
        }
        out[i] = v;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

bool modp_coprime_at(const ZBi& a, const ZBi& b, unsigned long x0) {
    std::vector<unsigned long> u = modp_specialize(a, x0);
    std::vector<unsigned long> v = modp_specialize(b, x0);
    bool lead_alive = static_cast<int>(u.size()) == zbi_deg(a) + 1 ||
                      static_cast<int>(v.size()) == zbi_deg(b) + 1;
    if (!lead_alive || u.empty() || v.empty()) return false;
    while (!v.empty()) {
        unsigned long inv = modp_pow(v.back(), kCertPrime - 2);
        while (u.size() >= v.size()) {
            unsigned long c = modp_mul(u.back(), inv);
            std::size_t off = u.size() - v.size();
            for (std::size_t i = 0; i < v.size(); ++i)
                u[off + i] = modp_sub(u[off + i], modp_mul(c, v[i]));
            while (!u.empty() && u.back() == 0) u.pop_back();
        }
        std::swap(u, v);
    }
    return u.size() == 1;
}

}  // namespace

BiPoly resultant_elim(const BiPoly& p, const BiPoly& q, int var) {
    if (var != 0 && var != 1) throw DomainError("variable index must be 0 or 1");
    if (p.is_zero() || q.is_zero()) throw DomainError("resultant of a zero polynomial");
    if (p.degree(var) < 1 || q.degree(var) < 1)
        throw DomainError("both inputs need positive degree in the eliminated variable");
    auto [a, sa] = to_zbi(p, var);
    auto [b, sb] = to_zbi(q, var);
    ZPoly r = subres_resultant(a, b);
    /* Res(sa P, sb Q) = sa^{deg Q} sb^{deg P} Res(P, Q) */
    Rat unscale = Rat(1) / (Rat(pow_int(sa, static_cast<unsigned long>(zbi_deg(b)))) *
                            Rat(pow_int(sb, static_cast<unsigned long>(zbi_deg(a)))));
    BiPoly out;
    out.nvars = 2;
    int other = 1 - var;
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (r[j] == 0) continue;
        Mono m{0, 0, 0};
        m[static_cast<std::size_t>(other)] = static_cast<long>(j);
        out.insert(m, Rat(r[j]) * unscale);
    }
    return out;
}

BiPoly bipoly_gcd(const BiPoly& p, const BiPoly& q) {
    if (p.is_zero() || q.is_zero()) throw DomainError("gcd of a zero polynomial");
    auto [a, sa] = to_zbi(p, 1);
    auto [b, sb] = to_zbi(q, 1);
    (void)sa;
    (void)sb;

    ZPoly cont = zp_gcd(zbi_content(a), zbi_content(b));
    a = zbi_exact_div(a, zbi_content(a));
    b = zbi_exact_div(b, zbi_content(b));
    if (zbi_deg(a) < zbi_deg(b)) std::swap(a, b);

    bool coprime = false;
    if (zbi_deg(b) > 0)
        for (unsigned long x0 : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul})
            if ((coprime = modp_coprime_at(a, b, x0))) break;
    if (coprime) a = ZBi{ZPoly{Int(1)}};

    while (!coprime && !b.empty()) {
        if (zbi_deg(b) == 0) {
            a = {ZPoly{Int(1)}};
            break;
        }
        ZBi r = zbi_prem(a, b);
        a = b;
        ZPoly c = zbi_content(r);
        b = c.empty() ? ZBi{} : zbi_exact_div(r, c);
    }
    ZPoly ca = zbi_content(a);
    a = zbi_exact_div(a, ca);
    a = zbi_scale(a, cont);

    /* canonical representative over Q: integer primitive coefficients */
    Int ig(0);
    for (const ZPoly& row : a)
        for (const Int& c : row) ig = gcd(ig, c);
    if (ig > 1)
        for (ZPoly& row : a)
            for (Int& c : row) c = divexact(c, ig);

    /* sign normalization: lexicographically leading term positive */
    BiPoly g = from_zbi(a, 1);
    if (!g.terms.empty() && g.terms.rbegin()->second < 0)
        for (auto& [m, c] : g.terms) c = -c;
    return g;
}

}  // namespace modcorr
