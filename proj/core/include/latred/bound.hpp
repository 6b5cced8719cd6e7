#pragma once

#include <vector>

#include "latred/hermite.hpp"

namespace latred {

// A product of positive rationals raised to rational exponents, e.g.
// (1+eps)^2 * gamma_k^{(n-1)/(k-1)} * vol^2. Comparisons between two such
// products are decided exactly by raising both sides to the lcm of all
// exponent denominators, which makes every factor rational.
class Bound {
 public:
  struct Term {
    Rat base;       // > 0
    long long num = 1;
    long long den = 1;  // > 0
  };

  static Bound one() { return Bound(); }
  static Bound rational(const Rat& r);
  // gamma_k as (gamma_k^k)^{1/k}; an upper bound above the exact ranks.
  static Bound gamma(int k);

  Bound pow(long long num, long long den = 1) const;
  Bound operator*(const Bound& other) const;
  Bound& operator*=(const Bound& other);

  const std::vector<Term>& terms() const { return terms_; }
  double approx_log2() const;

 private:
  std::vector<Term> terms_;
};

// Exact decision of lhs <= rhs.
bool bound_le(const Bound& lhs, const Bound& rhs);
bool bound_lt(const Bound& lhs, const Bound& rhs);

// Both sides raised to the common clearing power, as exact rationals;
// used for check witnesses.
std::string bound_witness(const Bound& lhs, const Bound& rhs);

}  // namespace latred
