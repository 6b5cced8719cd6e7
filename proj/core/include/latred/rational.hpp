#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latred {

// All arithmetic in this library is exact: arbitrary-precision integers for
// basis entries and arbitrary-precision rationals for GSO data and every
// predicate. There is no floating point on any correctness path.
using Int = mpz_class;
using Rat = mpq_class;

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ParamError : std::runtime_error {
  explicit ParamError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an enumeration would exceed the configured rank cap. Never
// silently approximated.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

// Nearest integer, halves round up: floor(x + 1/2).
inline Int round_nearest(const Rat& x) {
  Rat y = x + Rat(1, 2);
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), y.get_num().get_mpz_t(), y.get_den().get_mpz_t());
  return r;
}

// Nearest integer with halves toward zero, so |x - round(x)| <= 1/2 and
// the result is 0 exactly when |x| <= 1/2. Size reduction uses this to be
// a no-op on already size-reduced input.
inline Int round_half_to_zero(const Rat& x) {
  Rat y;
  Int r;
  if (x >= 0) {
    y = x - Rat(1, 2);
    mpz_cdiv_q(r.get_mpz_t(), y.get_num().get_mpz_t(), y.get_den().get_mpz_t());
  } else {
    y = x + Rat(1, 2);
    mpz_fdiv_q(r.get_mpz_t(), y.get_num().get_mpz_t(), y.get_den().get_mpz_t());
  }
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
  return r;  // base canonical => powers canonical
}

// Smallest s with x <= 2^s, for x >= 1. Overestimates by nothing.
inline unsigned long ceil_log2(const Int& x) {
  if (x <= 0) throw ParamError("ceil_log2: argument must be positive");
  if (x == 1) return 0;
  size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);  // floor(log2 x) + 1
  if (mpz_popcount(x.get_mpz_t()) == 1) return bits - 1;
  return bits;
}

// Integer upper bound on log2 of a rational >= 1.
inline unsigned long ceil_log2(const Rat& x) {
  if (x < 1) throw ParamError("ceil_log2: argument must be >= 1");
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return ceil_log2(c);
}

inline double to_double(const Rat& x) { return x.get_d(); }

// log2 of a positive rational as a double, stable for huge operands.
double log2_rat(const Rat& x);

}  // namespace latred
