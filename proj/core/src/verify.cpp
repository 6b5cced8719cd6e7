#include "latred/verify.hpp"

#include <algorithm>

#include "latred/dual.hpp"
#include "latred/gso.hpp"
#include "latred/lll.hpp"

namespace latred {

std::string CheckResult::to_line() const {
  switch (status) {
    case CheckStatus::pass: return "PASS " + name;
    case CheckStatus::fail: return "FAIL " + name + " " + witness;
    default: return "INAPPLICABLE " + name + " " + witness;
  }
}

namespace {

CheckResult pass(std::string name) { return {std::move(name), CheckStatus::pass, ""}; }

CheckResult fail(std::string name, std::string w) {
  return {std::move(name), CheckStatus::fail, std::move(w)};
}

CheckResult na(std::string name, std::string w) {
  return {std::move(name), CheckStatus::inapplicable, std::move(w)};
}

// lhs <= rhs or a fail with the cleared witness.
bool le_or_witness(const Bound& lhs, const Bound& rhs, std::string& w) {
  if (bound_le(lhs, rhs)) return true;
  w = bound_witness(lhs, rhs);
  return false;
}

std::string range_str(BlockRange r) {
  return "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]";
}

}  // namespace

CheckResult is_size_reduced(const Basis& b) {
  auto g = gso_compute(b);
  Rat half(1, 2);
  for (int i = 0; i < g.rank(); ++i)
    for (int j = 0; j < i; ++j)
      if (abs(g.mu[i][j]) > half)
        return fail("size-reduced", "mu[" + std::to_string(i + 1) + "][" +
                                        std::to_string(j + 1) + "]=" +
                                        g.mu[i][j].get_str());
  return pass("size-reduced");
}

CheckResult is_lll_reduced(const Basis& b, const Rat& eps) {
  auto sr = is_size_reduced(b);
  if (!sr.passed()) return fail("lll-reduced", sr.witness);
  auto g = gso_compute(b);
  Rat one_eps = Rat(1) + eps;
  for (int i = 1; i < g.rank(); ++i) {
    Rat nu = g.mu[i][i - 1];
    Rat proj = g.norm_sq[i] + nu * nu * g.norm_sq[i - 1];
    if (g.norm_sq[i - 1] > one_eps * proj)
      return fail("lll-reduced",
                  "lovasz at i=" + std::to_string(i + 1) + ": " +
                      g.norm_sq[i - 1].get_str() + " > (1+eps)*" +
                      proj.get_str());
  }
  return pass("lll-reduced");
}

CheckResult is_svp_reduced(const Basis& b, BlockRange r, const Bound& delta,
                           int max_rank) {
  b.check_range(r);
  std::string name = "svp-reduced" + range_str(r);
  if (r.rank() > max_rank)
    return na(name, "rank " + std::to_string(r.rank()) + " above cap");
  OracleBudget scratch{max_rank, 0};
  Rat lam = block_lambda1_sq(b, r, scratch);
  Rat w_lo = gso_compute(b).norm_sq[r.lo - 1];
  std::string w;
  if (le_or_witness(Bound::rational(w_lo),
                    delta.pow(2) * Bound::rational(lam), w))
    return pass(name);
  return fail(name, w);
}

CheckResult is_hsvp_reduced(const Basis& b, BlockRange r,
                            const Bound& delta_h) {
  b.check_range(r);
  std::string name = "hsvp-reduced" + range_str(r);
  auto g = gso_compute(b);
  int rk = r.rank();
  Rat w_lo = g.norm_sq[r.lo - 1];
  Rat volsq = block_volume_sq(g, r);
  std::string w;
  if (le_or_witness(Bound::rational(w_lo).pow(rk),
                    delta_h.pow(2 * rk) * Bound::rational(volsq), w))
    return pass(name);
  return fail(name, w);
}

CheckResult is_dsvp_reduced(const Basis& b, BlockRange r, const Bound& delta,
                            int max_rank) {
  b.check_range(r);
  std::string name = "dsvp-reduced" + range_str(r);
  if (r.rank() > max_rank)
    return na(name, "rank " + std::to_string(r.rank()) + " above cap");
  if (!window_is_lll_reduced(b, r, Rat(1, 3)))
    return fail(name, "block is not 1/3-LLL-reduced");
  OracleBudget scratch{max_rank, 0};
  Rat lam_d = dual_block_lambda1_sq(b, r, scratch);
  Rat d1 = Rat(1) / gso_compute(b).norm_sq[r.hi - 1];  // ||d_1||^2
  std::string w;
  if (le_or_witness(Bound::rational(d1), delta.pow(2) * Bound::rational(lam_d),
                    w))
    return pass(name);
  return fail(name, w);
}

CheckResult is_dhsvp_reduced(const Basis& b, BlockRange r,
                             const Bound& delta_h) {
  b.check_range(r);
  std::string name = "dhsvp-reduced" + range_str(r);
  auto g = gso_compute(b);
  int rk = r.rank();
  // Reversed dual: first vector norm^2 = 1/w_hi, squared volume = 1/vol^2.
  Rat volsq = block_volume_sq(g, r);
  Rat w_hi = g.norm_sq[r.hi - 1];
  std::string w;
  if (le_or_witness(Bound::rational(volsq),
                    delta_h.pow(2 * rk) * Bound::rational(w_hi).pow(rk), w))
    return pass(name);
  return fail(name, w);
}

CheckResult is_twin_reduced(const Basis& b, int d, const Bound& delta) {
  if (d < 1 || d + 1 > b.cols())
    throw ParamError("is_twin_reduced: need 1 <= d < n");
  std::string name = "twin-reduced(d=" + std::to_string(d) + ")";
  auto h = is_hsvp_reduced(b, {1, d}, delta);
  if (!h.passed()) return fail(name, h.name + ": " + h.witness);
  auto dh = is_dhsvp_reduced(b, {2, d + 1}, delta);
  if (!dh.passed()) return fail(name, dh.name + ": " + dh.witness);
  return pass(name);
}

CheckResult check_twin_fact(const Basis& b, int d, const Bound& delta) {
  std::string name = "twin-fact(d=" + std::to_string(d) + ")";
  if (d < 2) return na(name, "needs d >= 2");
  auto tw = is_twin_reduced(b, d, delta);
  if (!tw.passed()) return na(name, "precondition twin-reduced fails");
  auto g = gso_compute(b);
  Rat w1 = g.norm_sq[0];
  Rat wd1 = g.norm_sq[d];
  Rat volsq = block_volume_sq(g, {1, d + 1});
  std::string w;
  if (!le_or_witness(Bound::rational(w1),
                     delta.pow(4 * d, d - 1) * Bound::rational(wd1), w))
    return fail(name, "decay: " + w);
  if (!le_or_witness(delta.pow(-2 * d, d - 1) * Bound::rational(w1),
                     Bound::rational(volsq).pow(1, d + 1), w))
    return fail(name, "volume lower: " + w);
  if (!le_or_witness(Bound::rational(volsq).pow(1, d + 1),
                     delta.pow(2 * d, d - 1) * Bound::rational(wd1), w))
    return fail(name, "volume upper: " + w);
  return pass(name);
}

CheckResult check_gluing(const Basis& b, int d, const Bound& alpha,
                         const Bound& beta, const Bound& eta, int max_rank) {
  int n = b.cols();
  std::string name = "gluing(d=" + std::to_string(d) + ")";
  if (d < 1 || d >= n) throw ParamError("check_gluing: need 1 <= d < n");
  auto g = gso_compute(b);
  Rat w1 = g.norm_sq[0];
  Rat wd1 = g.norm_sq[d];
  bool any_applicable = false;

  // Item 1: beta-SVP tail + alpha-decay + strict guard => alphabeta-SVP.
  if (n <= max_rank) {
    OracleBudget scratch{max_rank, 0};
    bool hyp = is_svp_reduced(b, {d + 1, n}, beta, max_rank).passed() &&
               bound_le(Bound::rational(w1),
                        alpha.pow(2) * Bound::rational(wd1));
    if (hyp) {
      Rat lam_full = lambda1_sq(b, scratch);
      Rat lam_head = block_lambda1_sq(b, {1, d}, scratch);
      if (lam_full < lam_head) {
        any_applicable = true;
        std::string w;
        if (!le_or_witness(
                Bound::rational(w1),
                (alpha * beta).pow(2) * Bound::rational(lam_full), w))
          return fail(name, "item 1: " + w);
      }
    }
  }

  // Item 2: eta-HSVP head and tail + eta^{2d} decay => eta^{n-1}-HSVP.
  bool hyp2 =
      is_hsvp_reduced(b, {1, d}, eta.pow(d - 1)).passed() &&
      is_hsvp_reduced(b, {d + 1, n}, eta.pow(n - d - 1)).passed() &&
      bound_le(Bound::rational(w1), eta.pow(4 * d) * Bound::rational(wd1));
  if (hyp2) {
    any_applicable = true;
    auto concl = is_hsvp_reduced(b, {1, n}, eta.pow(n - 1));
    if (!concl.passed()) return fail(name, "item 2: " + concl.witness);
  }

  if (!any_applicable) return na(name, "no item's hypotheses hold");
  return pass(name);
}

CheckResult is_slide_reduced_small(const Basis& b, int k, const Bound& delta,
                                   int max_rank) {
  int n = b.cols();
  int q = n - k;
  std::string name = "slide-reduced-small(k=" + std::to_string(k) + ")";
  if (k < 2 || q < 1 || q > k)
    throw ParamError("slide small: need n = k+q with 1 <= q <= k, k >= 2");
  auto sr = is_size_reduced(b);
  if (!sr.passed()) return fail(name, sr.witness);
  auto head = is_svp_reduced(b, {1, q}, delta, max_rank);
  if (!head.passed()) return {name, head.status, head.name + ": " + head.witness};
  for (int i = q + 1; i <= std::max(k, q + 1); ++i) {
    auto tail = is_svp_reduced(b, {i, n}, delta, max_rank);
    if (!tail.passed())
      return {name, tail.status, tail.name + ": " + tail.witness};
  }
  auto dual = is_dsvp_reduced(b, {2, q + 1}, delta, max_rank);
  if (!dual.passed()) return {name, dual.status, dual.name + ": " + dual.witness};
  return pass(name);
}

CheckResult is_slide_reduced_large(const Basis& b, int k, const Bound& delta,
                                   int max_rank) {
  int n = b.cols();
  std::string name = "slide-reduced-large(k=" + std::to_string(k) + ")";
  if (k < 2 || n < 2 * k)
    throw ParamError("slide large: need n >= 2k, k >= 2");
  int p = n / k;
  int q = n - p * k;
  auto sr = is_size_reduced(b);
  if (!sr.passed()) return fail(name, sr.witness);
  Bound eta = (delta.pow(2) * Bound::gamma(k)).pow(k + q - 1, 2 * (k - 1));
  auto mord1 = is_hsvp_reduced(b, {1, k + q}, eta);
  if (!mord1.passed())
    return fail(name, mord1.name + ": " + mord1.witness);
  auto mord2 = is_dhsvp_reduced(b, {2, k + q + 1}, eta);
  if (!mord2.passed())
    return fail(name, mord2.name + ": " + mord2.witness);
  for (int i = 1; i <= p - 1; ++i) {
    auto pr = is_svp_reduced(b, {i * k + q + 1, (i + 1) * k + q}, delta,
                             max_rank);
    if (!pr.passed()) return {name, pr.status, pr.name + ": " + pr.witness};
  }
  for (int i = 1; i <= p - 2; ++i) {
    auto du = is_dsvp_reduced(b, {i * k + q + 2, (i + 1) * k + q + 1}, delta,
                              max_rank);
    if (!du.passed()) return {name, du.status, du.name + ": " + du.witness};
  }
  return pass(name);
}

CheckResult check_thm_small(const Basis& b, int k, const Bound& delta,
                            const Rat& lambda1_sq_full, int max_rank) {
  int n = b.cols();
  int q = n - k;
  std::string name = "thm-small(k=" + std::to_string(k) + ")";
  if (k < 2 || q < 2 || q > k)
    throw ParamError("thm small: need n = k+q with 2 <= q <= k");
  if (k > max_rank) return na(name, "rank k above cap");
  OracleBudget scratch{max_rank, 0};
  Rat lam_block = block_lambda1_sq(b, {1, k}, scratch);
  Bound rhs = delta.pow(2) * Bound::gamma(k) *
              (delta.pow(2) * Bound::gamma(q))
                  .pow(static_cast<long long>(q + 1) * (n - k),
                       static_cast<long long>(q - 1) * k) *
              Bound::rational(lambda1_sq_full);
  std::string w;
  if (le_or_witness(Bound::rational(lam_block), rhs, w)) return pass(name);
  return fail(name, w);
}

CheckResult check_thm_large(const Basis& b, int k, const Bound& delta,
                            int max_rank) {
  int n = b.cols();
  std::string name = "thm-large(k=" + std::to_string(k) + ")";
  if (k < 2 || n < 2 * k) throw ParamError("thm large: need n >= 2k, k >= 2");
  int q = n - (n / k) * k;
  auto g = gso_compute(b);
  Rat w1 = g.norm_sq[0];
  Rat volsq = block_volume_sq(g, {1, n});
  Bound d2g = delta.pow(2) * Bound::gamma(k);
  std::string w;
  if (!le_or_witness(
          Bound::rational(w1).pow(n),
          d2g.pow(static_cast<long long>(n) * (n - 1), k - 1) *
              Bound::rational(volsq),
          w))
    return fail(name, "hsvp form: " + w);
  if (n > max_rank)
    return na(name, "hsvp form holds; svp guard undecidable above cap");
  OracleBudget scratch{max_rank, 0};
  Rat lam_full = lambda1_sq(b, scratch);
  Rat lam_head = block_lambda1_sq(b, {1, k + q}, scratch);
  if (lam_head > lam_full) {
    if (!le_or_witness(Bound::rational(w1),
                       delta.pow(2) * d2g.pow(2 * (n - k), k - 1) *
                           Bound::rational(lam_full),
                       w))
      return fail(name, "svp form: " + w);
  }
  return pass(name);
}

CheckResult check_appendix(const Basis& b, int d, int k, const Bound& delta,
                           int max_rank) {
  int n = b.cols();
  std::string name = "appendix(d=" + std::to_string(d) + ",k=" +
                     std::to_string(k) + ")";
  if (k < 2 || d < k || d >= n || (n - d) % k != 0)
    throw ParamError("appendix: need d >= k and k | (n-d)");
  int p = (n - d) / k;
  auto g = gso_compute(b);
  Rat wd1 = g.norm_sq[d];
  Bound d2g = delta.pow(2) * Bound::gamma(k);
  std::string w;
  for (int i = 0; i < p; ++i) {
    if (!le_or_witness(Bound::rational(wd1),
                       d2g.pow(2LL * i * k, k - 1) *
                           Bound::rational(g.norm_sq[i * k + d]),
                       w))
      return fail(name, "gso decay at i=" + std::to_string(i) + ": " + w);
  }
  Rat volsq = block_volume_sq(g, {d + 1, n});
  if (!le_or_witness(
          Bound::rational(wd1).pow(n - d),
          d2g.pow(static_cast<long long>(n - d - 1) * (n - d), k - 1) *
              Bound::rational(volsq),
          w))
    return fail(name, "hsvp form: " + w);
  if (n - d > max_rank)
    return na(name, "decay and hsvp hold; svp form needs rank " +
                        std::to_string(n - d) + " above cap");
  OracleBudget scratch{max_rank, 0};
  Rat lam_tail = block_lambda1_sq(b, {d + 1, n}, scratch);
  if (!le_or_witness(Bound::rational(wd1),
                     delta.pow(2) * d2g.pow(2 * (n - d - k), k - 1) *
                         Bound::rational(lam_tail),
                     w))
    return fail(name, "svp form: " + w);
  return pass(name);
}

Bound approx_svp_small_bound_sq(int n, int k, int q, const Rat& delta) {
  Bound d2 = Bound::rational(delta).pow(2);
  if (q == 0) return d2;  // direct oracle
  Rat one_eps = Rat(1) + Rat(1, n);
  Bound inner = Bound::rational(one_eps).pow(2) * d2 * Bound::gamma(q);
  return d2.pow(2) * Bound::gamma(k) *
         inner.pow(static_cast<long long>(q + 1) * (n - k),
                   static_cast<long long>(q - 1) * k);
}

Bound approx_svp_large_bound_sq_guard_true(int n, int k, const Rat& delta) {
  Rat one_eps = Rat(1) + Rat(1, n);
  Bound d2 = Bound::rational(delta).pow(2);
  Bound inner = Bound::rational(one_eps).pow(2) * d2 * Bound::gamma(k);
  return Bound::rational(one_eps).pow(2) * d2 *
         inner.pow(2LL * (n - k), k - 1);
}

Bound approx_svp_large_bound_sq_guard_false(int k, const Rat& delta) {
  // small-regime procedure on rank 2k with block size k, q = k, eps = 1/(2k)
  Rat one_eps = Rat(1) + Rat(1, 2 * k);
  Bound d2 = Bound::rational(delta).pow(2);
  Bound inner = Bound::rational(one_eps).pow(2) * d2 * Bound::gamma(k);
  return d2.pow(2) * Bound::gamma(k) * inner.pow(k + 1, k - 1);
}

}  // namespace latred
