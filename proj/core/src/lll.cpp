#include "latred/lll.hpp"

namespace latred {

namespace {

// Size-reduce window column k against window column j, maintaining mu.
void reduce_pair(Basis& b, WindowGso& g, int lo, int k, int j) {
  Int c = round_half_to_zero(g.mu[k][j]);
  if (c == 0) return;
  b.col_addmul(lo + k, lo + j, -c);
  Rat rc(c);
  for (int t = 0; t < j; ++t) g.mu[k][t] -= rc * g.mu[j][t];
  g.mu[k][j] -= rc;
}

// Swap window columns k-1 and k and patch the window GSO in place.
void swap_step(Basis& b, WindowGso& g, int lo, int k) {
  b.col_swap(lo + k - 1, lo + k);
  Rat nu = g.mu[k][k - 1];
  Rat w_up = g.w[k] + nu * nu * g.w[k - 1];  // new ||b*_{k-1}||^2
  Rat mu_new = nu * g.w[k - 1] / w_up;
  g.w[k] = g.w[k - 1] * g.w[k] / w_up;
  g.w[k - 1] = w_up;
  for (int j = 0; j < k - 1; ++j) std::swap(g.mu[k - 1][j], g.mu[k][j]);
  int r = g.rank();
  for (int i = k + 1; i < r; ++i) {
    Rat t1 = g.mu[i][k - 1];
    Rat t2 = g.mu[i][k];
    g.mu[i][k - 1] = mu_new * t1 + (Rat(1) - nu * mu_new) * t2;
    g.mu[i][k] = t1 - nu * t2;
  }
  g.mu[k][k - 1] = mu_new;
}

}  // namespace

void lll_window(Basis& b, BlockRange r, const Rat& eps) {
  b.check_range(r);
  if (eps < 0 || eps > 1) throw ParamError("lll: eps must be in [0,1]");
  WindowGso g = window_gso(gso_compute(b), r);
  int lo = r.lo - 1;
  int rk = r.rank();
  Rat one_eps = Rat(1) + eps;
  int k = 1;
  while (k < rk) {
    for (int j = k - 1; j >= 0; --j) reduce_pair(b, g, lo, k, j);
    Rat nu = g.mu[k][k - 1];
    Rat proj = g.w[k] + nu * nu * g.w[k - 1];  // ||pi_{k-1}(b_k)||^2
    if (g.w[k - 1] <= one_eps * proj) {
      ++k;
    } else {
      swap_step(b, g, lo, k);
      k = k > 1 ? k - 1 : 1;
    }
  }
}

Basis lll_reduce(Basis b, const Rat& eps) {
  lll_window(b, BlockRange{1, b.cols()}, eps);
  return b;
}

bool window_is_lll_reduced(const Basis& b, BlockRange r, const Rat& eps) {
  b.check_range(r);
  WindowGso g = window_gso(gso_compute(b), r);
  Rat half(1, 2);
  Rat one_eps = Rat(1) + eps;
  for (int i = 1; i < g.rank(); ++i) {
    for (int j = 0; j < i; ++j)
      if (abs(g.mu[i][j]) > half) return false;
    Rat nu = g.mu[i][i - 1];
    Rat proj = g.w[i] + nu * nu * g.w[i - 1];
    if (g.w[i - 1] > one_eps * proj) return false;
  }
  return true;
}

}  // namespace latred
