#pragma once

#include <utility>
#include <vector>

#include "modcorr/series.hpp"

namespace modcorr {

/* Levels whose curve has genus zero and a Hauptmodul realized as an
   eta quotient (plus level 1, handled through the j-function). */
bool hauptmodul_supported(long level);
const std::vector<long>& supported_levels();

/* Exponent table of the eta quotient prod eta(m tau)^{r_m} giving the
   Hauptmodul at the given level; pairs (m, r_m).  The fractional
   prefactor exponent sum(m r_m)/24 telescopes to -1. */
const std::vector<std::pair<long, long>>& hauptmodul_exponents(long level);

/* prod_{n>=1} (1 - q^{m n}) with all coefficients through q^order
   certified (truncation order+1); sparse by Euler's pentagonal
   recursion applied to each factor chain. */
Series eta_unit_series(long m, long order);

/* q-expansion t = q^{-1} + O(1) of the level's Hauptmodul, exact
   integer coefficients through q^order. */
Series hauptmodul_series(long level, long order);

/* Klein j, through q^order; this is hauptmodul_series(1, order). */
Series j_series(long order);

}  // namespace modcorr
