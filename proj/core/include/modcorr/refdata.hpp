#pragma once

#include <utility>
#include <vector>

#include "modcorr/modpoly.hpp"

namespace modcorr {

/* Frozen regression anchors for psi_polynomial: six (level, n) rows
   whose full coefficient lists were fixed in advance by two independent
   computations (160-digit numeric interpolation of the conjugate
   product, and an exact cyclotomic q-expansion with pole reduction).
   psi_polynomial must reproduce each term for term. */
std::vector<std::pair<long, long>> reference_rows();

ModPoly reference_psi(long level, long n);

}  // namespace modcorr
