#include "modcorr/eta.hpp"

#include <algorithm>
#include <map>

#include "modcorr/errors.hpp"

namespace modcorr {

namespace {

const std::map<long, std::vector<std::pair<long, long>>>& exponent_table() {
    static const std::map<long, std::vector<std::pair<long, long>>> table = {
        {2, {{1, 24}, {2, -24}}},
        {3, {{1, 12}, {3, -12}}},
        {4, {{1, 8}, {4, -8}}},
        {5, {{1, 6}, {5, -6}}},
        {6, {{1, 5}, {3, 1}, {2, -1}, {6, -5}}},
        {7, {{1, 4}, {7, -4}}},
        {8, {{1, 4}, {4, 2}, {2, -2}, {8, -4}}},
        {9, {{1, 3}, {9, -3}}},
        {10, {{1, 3}, {5, 1}, {2, -1}, {10, -3}}},
        {12, {{1, 3}, {4, 1}, {6, 2}, {2, -2}, {3, -1}, {12, -3}}},
        {13, {{1, 2}, {13, -2}}},
        {16, {{1, 2}, {8, 1}, {2, -1}, {16, -2}}},
        {18, {{1, 2}, {6, 1}, {9, 1}, {2, -1}, {3, -1}, {18, -2}}},
        {25, {{1, 1}, {25, -1}}},
    };
    return table;
}

/* E4 = 1 + 240 sum sigma_3(n) q^n, coefficients through q^order */
Series eisenstein_e4(long order) {
    std::vector<Int> sigma3(static_cast<std::size_t>(order) + 1, Int(0));
    for (long d = 1; d <= order; ++d) {
        Int d3 = Int(d) * d * d;
        for (long n = d; n <= order; n += d) sigma3[static_cast<std::size_t>(n)] += d3;
    }
    Series e4(order + 1, 1);
    e4.insert_term(0, Int(1));
    for (long n = 1; n <= order; ++n) e4.insert_term(n, 240 * sigma3[static_cast<std::size_t>(n)]);
    return e4;
}

}  // namespace

bool hauptmodul_supported(long level) {
    return level == 1 || exponent_table().count(level) != 0;
}

const std::vector<long>& supported_levels() {
    static const std::vector<long> levels = [] {
        std::vector<long> v{1};
        for (const auto& [m, factors] : exponent_table()) {
            (void)factors;
            v.push_back(m);
        }
        std::sort(v.begin(), v.end());
        return v;
    }();
    return levels;
}

const std::vector<std::pair<long, long>>& hauptmodul_exponents(long level) {
    auto it = exponent_table().find(level);
    if (it == exponent_table().end())
        throw DomainError("no eta-quotient Hauptmodul at level " + std::to_string(level));
    return it->second;
}

Series eta_unit_series(long m, long order) {
    if (m < 1 || order < 0) throw DomainError("eta factor needs m >= 1 and order >= 0");
    /* Euler: prod (1 - x^n) = sum_{k} (-1)^k x^{k(3k-1)/2} over all
       integer k, evaluated at x = q^m. */
    Series out(order + 1, 1);
    for (long k = 0;; ++k) {
        long e1 = m * (k * (3 * k - 1) / 2);
        long e2 = m * (k * (3 * k + 1) / 2);
        if (e1 > order && e2 > order) break;
        Int sign = (k % 2 == 0) ? 1 : -1;
        if (k == 0) {
            out.insert_term(0, sign);
            continue;
        }
        if (e1 <= order) out.insert_term(e1, sign);
        if (e2 <= order) out.insert_term(e2, sign);
    }
    return out;
}

Series hauptmodul_series(long level, long order) {
    if (order < 0) throw DomainError("expansion order must be nonnegative");
    if (level == 1) return j_series(order);
    const auto& factors = hauptmodul_exponents(level);

    long pref = 0;
    for (const auto& [m, r] : factors) pref += m * r;
    if (pref != -24)
        throw IntegrityError("eta exponents do not telescope to a q^{-1} prefactor");

    /* one extra coefficient of the unit part feeds the q^{-1} shift */
    long k = order + 1;
    Series num = Series::monomial(Int(1), 0, k + 1, 1);
    Series den = num;
    for (const auto& [m, r] : factors) {
        Series f = eta_unit_series(m, k).pow(static_cast<unsigned long>(r > 0 ? r : -r));
        (r > 0 ? num : den) = (r > 0 ? num : den) * f;
    }
    return (num * invert_unit(den)).shifted(-1);
}

Series j_series(long order) {
    if (order < 0) throw DomainError("expansion order must be nonnegative");
    long k = order + 1;
    Series delta_unit = eta_unit_series(1, k).pow(24);
    return (eisenstein_e4(k).pow(3) * invert_unit(delta_unit)).shifted(-1);
}

}  // namespace modcorr
