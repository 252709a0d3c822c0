#pragma once

#include <string>
#include <vector>

#include "modcorr/modpoly.hpp"

namespace modcorr {

struct VerifyCheck {
    std::string id;
    bool pass = false;
    std::string expected;
    std::string actual;
    double seconds = 0.0;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCheck> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    double seconds() const {
        double s = 0.0;
        for (const auto& c : checks) s += c.seconds;
        return s;
    }
};

/* Suite names in execution order:
     polydata    - frozen reference polynomial rows, term for term
     routes      - three intersection-number routes agree on a grid
     oracle      - definition-based counts equal the formula values
     properness  - gcd of correspondence polynomials constant iff
                   N1 N2 is non-square
     hurwitz     - class-number double-counting sweep
     identities  - divisor-sum identity, closed-form ratios, orbit
                   agreement, character specialization
     structural  - symmetry, degree, and root-series identity of every
                   supported minimal polynomial
     bijection   - scaling bijection between form families, pinned and
                   randomized instances */
const std::vector<std::string>& verify_suites();

/* Runs one suite; DomainError on an unknown name. */
VerifyReport run_suite(const std::string& suite, long guard = kDefaultGuard,
                       unsigned threads = 1);

/* "all" expands to every suite in order, otherwise a single report. */
std::vector<VerifyReport> run_suites(const std::string& suite, long guard = kDefaultGuard,
                                     unsigned threads = 1);

}  // namespace modcorr
