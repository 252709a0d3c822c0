#include "modcorr/quadforms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "modcorr/errors.hpp"

namespace modcorr {

namespace {

long long checked(__int128 v) {
    if (v > std::numeric_limits<long long>::max() / 2 ||
        v < std::numeric_limits<long long>::min() / 2)
        throw DomainError("form coefficients exceed the supported range");
    return static_cast<long long>(v);
}

long long floordiv(long long x, long long y) {
    long long q = x / y, r = x % y;
    return (r != 0 && ((r < 0) != (y < 0))) ? q - 1 : q;
}

long long isqrt_ll(long long n) {
    if (n < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

long long vp_ll(long long n, long long p) {
    long long v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

void require_disc_class(long long D) {
    if (D < 1) throw DomainError("determinant must be positive");
    if (D % 4 == 1 || D % 4 == 2)
        throw DomainError("determinant must be 0 or 3 mod 4");
}

void require_prime(long long p) {
    if (!is_small_prime(p)) throw DomainError("level must be prime here");
}

}  // namespace

long long det_form(const QForm& f) {
    __int128 d = 4 * static_cast<__int128>(f.A) * f.C - static_cast<__int128>(f.B) * f.B;
    return checked(d);
}

bool is_positive_definite(const QForm& f) { return f.A > 0 && det_form(f) > 0; }

long long content(const QForm& f) {
    return std::gcd(std::gcd(std::llabs(f.A), std::llabs(f.B)), std::llabs(f.C));
}

Mat2 mat_mul(const Mat2& g, const Mat2& h) {
    return {checked(static_cast<__int128>(g.a) * h.a + static_cast<__int128>(g.b) * h.c),
            checked(static_cast<__int128>(g.a) * h.b + static_cast<__int128>(g.b) * h.d),
            checked(static_cast<__int128>(g.c) * h.a + static_cast<__int128>(g.d) * h.c),
            checked(static_cast<__int128>(g.c) * h.b + static_cast<__int128>(g.d) * h.d)};
}

Mat2 mat_inverse(const Mat2& g) { return {g.d, -g.b, -g.c, g.a}; }

QForm apply(const QForm& f, const Mat2& g) {
    __int128 det = static_cast<__int128>(g.a) * g.d - static_cast<__int128>(g.b) * g.c;
    if (det != 1 && det != -1)
        throw DomainError("substitution matrix must be unimodular");
    __int128 A = f.A, B = f.B, C = f.C;
    __int128 p = g.a, q = g.b, r = g.c, s = g.d;
    return {checked(A * p * p + B * p * r + C * r * r),
            checked(2 * A * p * q + B * (p * s + q * r) + 2 * C * r * s),
            checked(A * q * q + B * q * s + C * s * s)};
}

bool is_reduced(const QForm& f) {
    return -f.A < f.B && f.B <= f.A && f.A <= f.C && !(f.A == f.C && f.B < 0);
}

std::pair<QForm, Mat2> reduce_form_transform(const QForm& f) {
    if (!is_positive_definite(f)) throw DomainError("form must be positive definite");
    QForm g = f;
    Mat2 u;
    for (;;) {
        if (g.B > g.A || g.B <= -g.A) {
            long long k = floordiv(g.A - g.B, 2 * g.A);
            Mat2 t{1, k, 0, 1};
            g = apply(g, t);
            u = mat_mul(u, t);
        } else if (g.A > g.C) {
            Mat2 s{0, -1, 1, 0};
            g = apply(g, s);
            u = mat_mul(u, s);
        } else {
            break;
        }
    }
    if (g.A == g.C && g.B < 0) {
        Mat2 s{0, -1, 1, 0};
        g = apply(g, s);
        u = mat_mul(u, s);
    }
    return {g, u};
}

QForm reduce_form(const QForm& f) { return reduce_form_transform(f).first; }

std::vector<QForm> reduced_forms(long long D, bool primitive_only) {
    std::vector<QForm> out;
    if (D <= 0 || D % 4 == 1 || D % 4 == 2) return out;
    long long bmax = isqrt_ll(D / 3);
    for (long long B = -bmax; B <= bmax; ++B) {
        if ((D + B * B) % 4) continue;
        long long AC = (D + B * B) / 4;
        for (long long A = std::max<long long>(1, std::llabs(B)); A * A <= AC; ++A) {
            if (AC % A) continue;
            QForm f{A, B, AC / A};
            if (!is_reduced(f)) continue;
            if (primitive_only && content(f) != 1) continue;
            out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rat form_weight(const QForm& f) {
    long long g = content(f);
    QForm prim = reduce_form({f.A / g, f.B / g, f.C / g});
    if (prim == QForm{1, 0, 1}) return Rat(1, 2);
    if (prim == QForm{1, 1, 1}) return Rat(1, 3);
    return Rat(1);
}

Rat primitive_h(long long D) {
    if (D < 1) throw DomainError("determinant must be positive");
    Rat total(0);
    for (const QForm& f : reduced_forms(D, true)) total += form_weight(f);
    return total;
}

Rat hurwitz_H(long long D) {
    if (D < 1) throw DomainError("determinant must be positive");
    static std::map<long long, Rat> memo;
    static std::mutex memo_mutex;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(D);
        if (it != memo.end()) return it->second;
    }
    Rat total(0);
    for (const QForm& f : reduced_forms(D, false)) total += form_weight(f);
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(D, total);
    return total;
}

int n_sqrt_count(long long p, long long D) {
    require_prime(p);
    require_disc_class(D);
    int count = 0;
    for (long long h = 0; h < 2 * p; ++h)
        if ((h * h + D) % (4 * p) == 0) ++count;
    return count;
}

std::pair<long long, long long> fundamental_disc(long long D) {
    if (D < 1) throw DomainError("determinant must be positive");
    long long f0 = 1, n = D;
    for (long long d = 2; d * d <= n; ++d) {
        while (n % (d * d) == 0) {
            n /= d * d;
            f0 *= d;
        }
    }
    long long m = -n;
    long long m4 = ((m % 4) + 4) % 4;
    if (m4 == 1) return {f0, m};
    if (f0 % 2 == 0) return {f0 / 2, 4 * m};
    /* D = 1,2 mod 4: no integer f with -D = f^2 dK exists; report the
       decomposition of the lattice Z[sqrt(-D)], -4D = f^2 dK */
    return {f0, 4 * m};
}

int chi(long long D, long long p) {
    require_prime(p);
    auto [f, dk] = fundamental_disc(D);
    (void)f;
    return kronecker(int_of(dk), int_of(p));
}

Rat HM_prime(long long p, long long D) {
    require_prime(p);
    require_disc_class(D);
    Rat t = hurwitz_H(D);
    if (D % (p * p) == 0) t += rat_of(p) * hurwitz_H(D / (p * p));
    return Rat(n_sqrt_count(p, D)) * t;
}

std::vector<Mat2> automorphs(const QForm& f) {
    if (!is_positive_definite(f)) throw DomainError("form must be positive definite");
    long long g = content(f);
    auto [red, u] = reduce_form_transform({f.A / g, f.B / g, f.C / g});

    std::vector<Mat2> base{{1, 0, 0, 1}};
    if (red.B == 0 && red.A == red.C) base.push_back({0, -1, 1, 0});
    if (red.A == red.B && red.B == red.C) {
        Mat2 r{0, -1, 1, 1};
        base.push_back(r);
        base.push_back(mat_mul(r, r));
    }

    std::vector<Mat2> out;
    Mat2 ui = mat_inverse(u);
    for (const Mat2& v : base) {
        Mat2 w = mat_mul(mat_mul(u, v), ui);
        if (!(apply(f, w) == f))
            throw IntegrityError("conjugated automorph fails to stabilize the form");
        out.push_back(w);
        out.push_back({-w.a, -w.b, -w.c, -w.d});
    }
    return out;
}

int stabilizer_index(long long M, const QForm& f) {
    if (M < 1) throw DomainError("level must be positive");
    int count = 0;
    for (const Mat2& w : automorphs(f))
        if (w.c % M == 0) ++count;
    return count / 2;
}

namespace {

/* all [A,B,C] of determinant D with M | A, 0 < A,C <= box, |B| <= box */
std::set<QForm> forms_in_box(long long M, long long D, long long box) {
    std::set<QForm> out;
    for (long long A = M; A <= box; A += M) {
        for (long long C = 1; C <= box; ++C) {
            long long t4 = 4 * A * C - D;
            if (t4 < 0) continue;
            long long r = isqrt_ll(t4);
            if (r * r != t4) continue;
            if (r <= box) {
                out.insert({A, r, C});
                if (r) out.insert({A, -r, C});
            }
        }
    }
    return out;
}

/* torsion elements of Gamma_0(M) (trace 0 or +-1) with small entries;
   together with the two parabolics they connect every pair of
   equivalent forms the box searches encounter */
std::vector<Mat2> orbit_generators(long long M) {
    long long bound = 3 * M + 2;
    std::vector<Mat2> gens{{1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, M, 1}, {1, 0, -M, 1}};
    for (long long a = -bound; a <= bound; ++a) {
        for (long long tr : {0LL, 1LL, -1LL}) {
            long long d = tr - a;
            if (std::llabs(d) > bound) continue;
            long long prod = a * d - 1; /* = b c with M | c */
            for (long long c = -bound; c <= bound; ++c) {
                if (c == 0 || c % M) continue;
                if (prod % c) continue;
                long long b = prod / c;
                if (std::llabs(b) > bound) continue;
                gens.push_back({a, b, c, d});
            }
        }
    }
    return gens;
}

Rat orbit_value(long long M, long long D, long long box, const std::vector<Mat2>& gens) {
    std::set<QForm> seed = forms_in_box(M, D, box);
    /* closure may pass through forms well outside the seed box */
    std::set<QForm> roam = forms_in_box(M, D, 4 * box);
    std::set<QForm> seen;
    Rat total(0);
    for (const QForm& f0 : seed) {
        if (seen.count(f0)) continue;
        seen.insert(f0);
        std::vector<QForm> stack{f0};
        while (!stack.empty()) {
            QForm f = stack.back();
            stack.pop_back();
            for (const Mat2& g : gens) {
                QForm f2 = apply(f, g);
                if (roam.count(f2) && !seen.count(f2)) {
                    seen.insert(f2);
                    stack.push_back(f2);
                }
            }
        }
        total += Rat(1, stabilizer_index(M, f0));
    }
    return total;
}

}  // namespace

Rat HM_orbit(long long M, long long D, long long max_box) {
    if (M < 1) throw DomainError("level must be positive");
    require_disc_class(D);
    long long b0 = std::max<long long>({24, 3 * M + 2, isqrt_ll(4 * D) + 8});
    if (max_box <= 0) max_box = 12 * b0;
    std::vector<Mat2> gens = orbit_generators(M);
    std::vector<Rat> vals;
    for (long long box = b0; box <= max_box; box += b0) {
        vals.push_back(orbit_value(M, D, box, gens));
        std::size_t k = vals.size();
        if (k >= 3 && vals[k - 1] == vals[k - 2] && vals[k - 2] == vals[k - 3])
            return vals[k - 1];
    }
    throw DomainError("orbit search budget exhausted before the value stabilized");
}

namespace {

/* H(D/p^2)/H(D) in closed form, with w the valuation of p in the
   conductor:  T(w-1)/T(w)  where  T(k) = 1 + (1 - chi/p) (p + ... + p^k),
   zero when w = 0. */
Rat ratio_closed(long long p, long long D) {
    auto [f, dk] = fundamental_disc(D);
    (void)dk;
    long long w = vp_ll(f, p);
    if (w == 0) return Rat(0);
    Rat x(chi(D, p));
    auto t = [&](long long k) -> Rat {
        Rat geo(0);
        Int pj(1);
        for (long long j = 1; j <= k; ++j) {
            pj *= int_of(p);
            geo += Rat(pj);
        }
        return Rat(1) + (Rat(1) - x / rat_of(p)) * geo;
    };
    return t(w - 1) / t(w);
}

Rat ap_closed(long long p, long long D) {
    auto [f, dk] = fundamental_disc(D);
    (void)dk;
    if (vp_ll(f, p) == 0) return Rat(1 + chi(D, p));
    return Rat(1) + rat_of(p) * ratio_closed(p, D);
}

}  // namespace

Rat Ap(long long p, long long D) {
    require_prime(p);
    require_disc_class(D);
    Rat h = hurwitz_H(D);
    if (h == 0) throw DomainError("class number vanishes; the ratio is undefined");
    Rat value = HM_prime(p, D) / h;
    if (value != ap_closed(p, D))
        throw IntegrityError("class-number ratio disagrees with its closed form");
    return value;
}

Rat class_ratio(long long p, long long D) {
    require_prime(p);
    require_disc_class(D);
    if (D % (p * p) != 0) throw DomainError("p^2 must divide the determinant");
    Rat h = hurwitz_H(D);
    if (h == 0) throw DomainError("class number vanishes; the ratio is undefined");
    long long q = D / (p * p);
    Rat num = (q % 4 == 1 || q % 4 == 2) ? Rat(0) : hurwitz_H(q);
    Rat value = num / h;
    if (value != ratio_closed(p, D))
        throw IntegrityError("enumerated class ratio disagrees with its closed form");
    return value;
}

ScalingBijectionReport scaling_bijection_check(long long e, long long D, long long M, long long bound) {
    if (e < 1 || D < 1 || M < 1 || bound < 1) throw DomainError("arguments must be positive");
    if (D % (e * e) != 0) throw DomainError("e^2 must divide D");
    ScalingBijectionReport rep;
    rep.e = e;
    rep.D = D;
    rep.M = M;
    rep.bound = bound;

    struct S1El {
        long long d;
        QForm f;
        long long Z;
        bool operator==(const S1El& o) const { return d == o.d && f == o.f && Z == o.Z; }
    };
    struct S2El {
        QForm f;
        long long Z;
        bool operator==(const S2El& o) const { return f == o.f && Z == o.Z; }
    };

    auto describe = [](long long a, long long b, long long c) {
        return "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
    };

    /* both families admit either definite sign; only the determinant
       and divisibility constraints are imposed */
    std::vector<S1El> set1;
    for (long long d = 1; d * d <= D; ++d) {
        if (D % (d * d)) continue;
        long long ge = std::gcd(e, d);
        for (long long Z = 1; Z <= ge; ++Z) {
            if (ge % Z) continue;
            for (long long a = -bound; a <= bound; ++a) {
                if (a == 0) continue;
                long long g = std::gcd(std::llabs(a), M);
                long long s = (M / g) * (M / g);
                if ((D / (d * d)) % s) continue;
                long long det = D / (d * d) / s;
                for (long long b = -bound; b <= bound; ++b) {
                    long long v4 = det + b * b;
                    if (v4 == 0 || v4 % 4 || v4 % (4 * a)) continue;
                    long long c = v4 / (4 * a);
                    if (c == 0 || std::llabs(c) > bound) continue;
                    if (4 * a * c - b * b != det) continue;
                    if (std::gcd(std::gcd(std::llabs(a), std::llabs(b)), std::llabs(c)) != 1)
                        continue;
                    set1.push_back({d, {a, b, c}, Z});
                }
            }
        }
    }

    std::vector<S2El> set2;
    for (long long Z = 1; Z <= e; ++Z) {
        if (e % Z || D % (Z * Z)) continue;
        long long det = D / (Z * Z);
        for (long long A = -bound; A <= bound; ++A) {
            if (A == 0 || A % M) continue;
            for (long long B = -bound; B <= bound; ++B) {
                long long v4 = det + B * B;
                if (v4 == 0 || v4 % (4 * A)) continue;
                long long C = v4 / (4 * A);
                if (C == 0 || std::llabs(C) > bound) continue;
                if (4 * A * C - B * B != det) continue;
                set2.push_back({{A, B, C}, Z});
            }
        }
    }

    auto fwd = [&](const S1El& el) -> S2El {
        long long g = std::gcd(std::llabs(el.f.A), M);
        long long s = (M / g) * el.d / el.Z;
        return {{s * el.f.A, s * el.f.B, s * el.f.C}, el.Z};
    };
    auto inv = [&](const S2El& el) -> S1El {
        long long g =
            std::gcd(std::gcd(std::llabs(el.f.A), std::llabs(el.f.B)), std::llabs(el.f.C));
        QForm prim{el.f.A / g, el.f.B / g, el.f.C / g};
        long long d = g * el.Z * std::gcd(std::llabs(prim.A), M) / M;
        return {d, prim, el.Z};
    };

    for (const S1El& el : set1) {
        S2El im = fwd(el);
        S1El back = inv(im);
        if (!(back == el))
            rep.violations.push_back("set1 element (d=" + std::to_string(el.d) + ", " +
                                     describe(el.f.A, el.f.B, el.f.C) +
                                     ", Z=" + std::to_string(el.Z) + ") fails the round trip");
    }
    for (const S2El& el : set2) {
        S1El pre = inv(el);
        bool member = pre.d >= 1 && D % (pre.d * pre.d) == 0;
        if (!member || !(fwd(pre) == el))
            rep.violations.push_back("set2 element (" + describe(el.f.A, el.f.B, el.f.C) +
                                     ", Z=" + std::to_string(el.Z) + ") fails the round trip");
    }
    rep.set1_size = set1.size();
    rep.set2_size = set2.size();
    return rep;
}

}  // namespace modcorr
