#pragma once

#include <stdexcept>
#include <string>

namespace modcorr {

/* Caller passed arguments outside an operation's domain
   (unsupported level, gcd violation, non-proper pair, ...).
   The CLI maps this to exit code 2. */
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/* A series truncation window was exhausted before a computation could
   certify its result.  Recoverable by recomputing with a larger guard. */
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/* An internal cross-check failed: a quantity provably integral came out
   non-integral, two routes to the same value disagreed, or cached data is
   inconsistent.  Never expected on a correct build; the CLI maps this to
   exit code 3. */
struct IntegrityError : std::runtime_error {
    explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace modcorr
