#include "latred/dbkz.hpp"

#include <cmath>

#include "latred/dual.hpp"
#include "latred/hermite.hpp"

namespace latred {

long long dbkz_default_tours(const Basis& b, int window_rank, int k,
                             const Rat& eps) {
  if (k < 2) throw ParamError("dbkz: k must be >= 2");
  if (eps <= 0 || eps > 1) throw ParamError("dbkz: eps must be in (0,1]");
  long n = window_rank;
  // log2(5 ||B||) <= ceil_log2(5 ceil(sqrt(max ||b_j||^2)))
  Int norm_sq = b.max_norm_sq();
  Int s;
  mpz_sqrt(s.get_mpz_t(), norm_sq.get_mpz_t());
  if (s * s < norm_sq) s += 1;
  unsigned long la = ceil_log2(Int(5 * s));
  unsigned long lb = ceil_log2(Rat(Int(n) * Int(static_cast<long>(la))) / eps);
  Int num = Int(2) * Int(n) * Int(n) * Int(static_cast<long>(lb));
  Int den = Int(k - 1) * Int(k - 1);
  Int tours;
  mpz_cdiv_q(tours.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return tours.get_si();
}

namespace {

// Volume trace deviation of the proof sketch: x_i relative to the
// fixed-point profile y_i, over the window.
double tour_deviation(const Basis& b, BlockRange w, int k, const Rat& delta) {
  auto g = gso_compute(b);
  int n = w.rank();
  double logvol_total = 0;
  std::vector<double> logw(n);
  for (int t = 0; t < n; ++t) {
    logw[t] = log2_rat(g.norm_sq[w.lo - 1 + t]) / 2;
    logvol_total += logw[t];
  }
  double log_dg = log2_rat(delta) +
                  log2_rat(hermite_upper_bound(k).gamma_pow_k) / (2.0 * k);
  double dev = 0;
  double prefix = 0;
  for (int t = 0; t < k - 1; ++t) prefix += logw[t];
  for (int i = 1; i <= n - k; ++i) {
    prefix += logw[k + i - 2];
    double x = prefix - (static_cast<double>(k + i - 1) / n) * logvol_total;
    double y = (static_cast<double>(n - k - i + 1) * (k + i - 1) / (k - 1)) *
               log_dg;
    double d = std::fabs(x / y - 1.0);
    if (d > dev) dev = d;
  }
  return dev;
}

Basis dbkz_window(Basis b, BlockRange w, const DbkzParams& p,
                  OracleBudget& budget, DbkzReport* report) {
  int n = w.rank();
  int k = p.k;
  if (k < 2 || n <= k) throw ParamError("dbkz: need window rank > k >= 2");
  long long tours =
      p.tours > 0 ? p.tours : dbkz_default_tours(b, n, k, p.eps);
  if (report) {
    *report = DbkzReport{};
    report->tours_budget = tours;
  }
  auto run_tour = [&] {
    for (int i = 1; i <= n - k; ++i)
      b = svp_reduce_block(std::move(b),
                           {w.lo + i - 1, w.lo + i + k - 2}, budget, p.delta);
    for (int j = n - k + 1; j >= 1; --j)
      b = dsvp_reduce_block(std::move(b),
                            {w.lo + j - 1, w.lo + j + k - 2}, budget, p.delta);
    if (report) {
      ++report->tours_run;
      report->tour_dev.push_back(tour_deviation(b, w, k, p.delta));
    }
  };
  Basis two_ago;
  for (long long t = 0; t < tours; ++t) {
    Basis before = b;
    run_tour();
    if (p.stop_at_fixed_point) {
      if (b == before) break;  // remaining tours are no-ops
      if (t >= 1 && b == two_ago) {
        // 2-cycle: the state after all N tours depends only on the parity
        // of the remaining count
        if ((tours - 1 - t) % 2 == 1 && t + 1 < tours) run_tour();
        break;
      }
    }
    two_ago = std::move(before);
  }
  b = svp_reduce_block(std::move(b), {w.lo, w.lo + k - 1}, budget, p.delta);
  return b;
}

}  // namespace

Basis dbkz_reduce(Basis b, const DbkzParams& p, OracleBudget& budget,
                  DbkzReport* report) {
  BlockRange whole{1, b.cols()};
  return dbkz_window(std::move(b), whole, p, budget, report);
}

Basis hsvp_reduce_block(Basis b, BlockRange r, int k, const Rat& eps,
                        OracleBudget& budget, DbkzReport* report) {
  b.check_range(r);
  if (r.rank() == k) {
    // A plain SVP reduction is already a sqrt(gamma_k)-HSVP reduction.
    long long c0 = budget.calls;
    Basis out = svp_reduce_block(std::move(b), r, budget);
    if (report) *report = DbkzReport{budget.calls - c0, 0, 0, {}};
    return out;
  }
  DbkzParams p;
  p.k = k;
  p.eps = eps;
  long long c0 = budget.calls;
  Basis out = dbkz_window(std::move(b), r, p, budget, report);
  if (report) report->oracle_calls = budget.calls - c0;
  return out;
}

Basis dhsvp_reduce_block(Basis b, BlockRange r, int k, const Rat& eps,
                         OracleBudget& budget, DbkzReport* report) {
  b.check_range(r);
  if (r.rank() == k) {
    long long c0 = budget.calls;
    Basis out = dsvp_reduce_block(std::move(b), r, budget);
    if (report) *report = DbkzReport{budget.calls - c0, 0, 0, {}};
    return out;
  }
  // DBKZ on the scaled reversed dual of the block; (1+eps/3)^2 <= 1+eps
  // realizes the half-power slack.
  ScaledBasis pb = projected_block(b, r);
  ScaledBasis rd = reversed_dual(pb.basis);
  DbkzParams p;
  p.k = k;
  p.eps = eps / 3;
  long long c0 = budget.calls;
  Basis dual_reduced = dbkz_window(rd.basis, {1, r.rank()}, p, budget, report);
  if (report) report->oracle_calls = budget.calls - c0;
  // Pull the dual transform back to the primal block: D' = D T gives
  // primal V = J T^{-T} J.
  IntMat t = solve_integral_cols(rd.basis, dual_reduced);
  int rk = r.rank();
  IntMat tinv = mat_inverse_unimodular(t);
  IntMat v(rk, std::vector<Int>(rk));
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < rk; ++j) v[i][j] = tinv[rk - 1 - j][rk - 1 - i];
  apply_window_transform(b, r, v);
  return size_reduce(std::move(b));
}

}  // namespace latred
