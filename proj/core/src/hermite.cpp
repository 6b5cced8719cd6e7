#include "latred/hermite.hpp"

namespace latred {

// gamma_k^k for the ranks where the constant is known exactly:
// gamma_1..gamma_8 squared are 1, 4/3, 2^{2/3}, 2, 8^{2/5}, (64/3)^{1/3},
// 64^{2/7}, 4, and gamma_24 = 4.
static bool exact_gamma_pow_k(int k, Rat& out) {
  switch (k) {
    case 1: out = 1; return true;
    case 2: out = Rat(4, 3); return true;
    case 3: out = 2; return true;
    case 4: out = 4; return true;
    case 5: out = 8; return true;
    case 6: out = Rat(64, 3); return true;
    case 7: out = 64; return true;
    case 8: out = 256; return true;
    case 24: out = pow_int(Int(4), 24); return true;
    default: return false;
  }
}

// pi > 333/106, a lower bound; it sits in denominators below, so the
// resulting gamma bound is an upper bound.
static const Rat kPiLower(333, 106);

Rat minkowski_gamma_pow_k(int k) {
  // gamma_k <= 4 v_k^{-2/k}  =>  gamma_k^k <= 4^k / v_k^2 with
  //   v_{2s}^2   = pi^{2s} / (s!)^2
  //   v_{2s+1}^2 = pi^{2s} 4^{s+1} / ((2s+1)!!)^2
  Rat four_k = pow_rat(Rat(4), static_cast<unsigned long>(k));
  if (k % 2 == 0) {
    unsigned long s = static_cast<unsigned long>(k) / 2;
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), s);
    Rat pi_k = pow_rat(kPiLower, static_cast<unsigned long>(k));
    return four_k * Rat(fact * fact) / pi_k;
  }
  unsigned long s = (static_cast<unsigned long>(k) - 1) / 2;
  Int dfact;
  mpz_2fac_ui(dfact.get_mpz_t(), static_cast<unsigned long>(k));  // k!!
  Rat pi_2s = pow_rat(kPiLower, 2 * s);
  Rat four_s1 = pow_rat(Rat(4), s + 1);
  return four_k * Rat(dfact * dfact) / (pi_2s * four_s1);
}

HermiteBound hermite_upper_bound(int k) {
  if (k < 1) throw ParamError("hermite_upper_bound: k must be >= 1");
  HermiteBound h;
  h.k = k;
  if (exact_gamma_pow_k(k, h.gamma_pow_k)) {
    h.exact = true;
  } else {
    h.gamma_pow_k = minkowski_gamma_pow_k(k);
    h.exact = false;
  }
  return h;
}

}  // namespace latred
