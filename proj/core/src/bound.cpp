#include "latred/bound.hpp"

#include <numeric>

namespace latred {

Bound Bound::rational(const Rat& r) {
  if (r <= 0) throw ParamError("bound: bases must be positive");
  Bound b;
  if (r != 1) b.terms_.push_back({r, 1, 1});
  return b;
}

Bound Bound::gamma(int k) {
  Bound b;
  HermiteBound h = hermite_upper_bound(k);
  if (h.gamma_pow_k != 1) b.terms_.push_back({h.gamma_pow_k, 1, k});
  return b;
}

Bound Bound::pow(long long num, long long den) const {
  if (den == 0) throw ParamError("bound: zero exponent denominator");
  if (den < 0) { den = -den; num = -num; }
  Bound b;
  if (num == 0) return b;
  b.terms_ = terms_;
  for (auto& t : b.terms_) {
    t.num *= num;
    t.den *= den;
    long long g = std::gcd(t.num < 0 ? -t.num : t.num, t.den);
    if (g > 1) { t.num /= g; t.den /= g; }
  }
  return b;
}

Bound Bound::operator*(const Bound& other) const {
  Bound b = *this;
  b *= other;
  return b;
}

Bound& Bound::operator*=(const Bound& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

double Bound::approx_log2() const {
  double s = 0;
  for (const auto& t : terms_)
    s += log2_rat(t.base) * static_cast<double>(t.num) /
         static_cast<double>(t.den);
  return s;
}

// Raise every term of both sides to the common lcm of exponent
// denominators and compare the resulting rationals.
static void accumulate(const Bound& b, long long lcm, Rat& out) {
  for (const auto& t : b.terms()) {
    long long e = t.num * (lcm / t.den);
    if (e == 0) continue;
    Rat p = pow_rat(t.base, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e < 0) p = Rat(1) / p;
    out *= p;
  }
}

static long long clearing_power(const Bound& lhs, const Bound& rhs) {
  long long lcm = 1;
  for (const auto& t : lhs.terms()) lcm = std::lcm(lcm, t.den);
  for (const auto& t : rhs.terms()) lcm = std::lcm(lcm, t.den);
  return lcm;
}

static int bound_cmp(const Bound& lhs, const Bound& rhs) {
  long long lcm = clearing_power(lhs, rhs);
  Rat l(1), r(1);
  accumulate(lhs, lcm, l);
  accumulate(rhs, lcm, r);
  return cmp(l, r);
}

bool bound_le(const Bound& lhs, const Bound& rhs) {
  return bound_cmp(lhs, rhs) <= 0;
}

bool bound_lt(const Bound& lhs, const Bound& rhs) {
  return bound_cmp(lhs, rhs) < 0;
}

std::string bound_witness(const Bound& lhs, const Bound& rhs) {
  long long lcm = clearing_power(lhs, rhs);
  Rat l(1), r(1);
  accumulate(lhs, lcm, l);
  accumulate(rhs, lcm, r);
  return "lhs^" + std::to_string(lcm) + "=" + l.get_str() + " rhs^" +
         std::to_string(lcm) + "=" + r.get_str();
}

}  // namespace latred
