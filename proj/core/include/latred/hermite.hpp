#pragma once

#include "latred/rational.hpp"

namespace latred {

// Upper bound on Hermite's constant gamma_k = sup lambda_1(L)^2 /
// vol(L)^{2/k}, held as the exact rational gamma_k^k so that fractional
// powers of gamma_k stay decidable after clearing denominators. Exact for
// k in {1..8, 24}; a Minkowski-type bound 4 v_k^{-2/k} (v_k the unit-ball
// volume, pi replaced by a rational lower bound) otherwise. An upper
// bound can only loosen a theorem check, never falsify a true one.
struct HermiteBound {
  int k = 1;
  Rat gamma_pow_k = 1;  // >= gamma_k^k, equality iff exact
  bool exact = true;
};

HermiteBound hermite_upper_bound(int k);

// The Minkowski-type bound on gamma_k^k for any k >= 1, used directly by
// the soundness tests that compare it against the exact table.
Rat minkowski_gamma_pow_k(int k);

}  // namespace latred
