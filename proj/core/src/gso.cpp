#include "latred/gso.hpp"

namespace latred {

GsoData gso_compute(const Basis& b) {
  int n = b.cols();
  auto gram = b.gram();
  GsoData g;
  g.mu.resize(n);
  g.norm_sq.resize(n);
  // r[j] = <b_i, b*_j> for the current row i.
  std::vector<Rat> r(n);
  for (int i = 0; i < n; ++i) {
    g.mu[i].resize(i);
    for (int j = 0; j < i; ++j) {
      Rat rij(gram[i][j]);
      for (int l = 0; l < j; ++l) rij -= g.mu[j][l] * r[l];
      r[j] = rij;
      g.mu[i][j] = rij / g.norm_sq[j];
    }
    Rat w(gram[i][i]);
    for (int j = 0; j < i; ++j) w -= g.mu[i][j] * r[j];
    if (w <= 0)
      throw ParamError("gso: rank-deficient basis (||b*_" +
                       std::to_string(i + 1) + "||^2 <= 0)");
    g.norm_sq[i] = w;
  }
  return g;
}

Basis size_reduce(Basis b) {
  auto g = gso_compute(b);
  int n = b.cols();
  for (int i = 1; i < n; ++i) {
    for (int j = i - 1; j >= 0; --j) {
      Int c = round_half_to_zero(g.mu[i][j]);
      if (c == 0) continue;
      b.col_addmul(i, j, -c);
      Rat rc(c);
      for (int t = 0; t < j; ++t) g.mu[i][t] -= rc * g.mu[j][t];
      g.mu[i][j] -= rc;
    }
  }
  return b;
}

Rat block_volume_sq(const GsoData& g, BlockRange r) {
  Rat v(1);
  for (int i = r.lo - 1; i < r.hi; ++i) v *= g.norm_sq[i];
  return v;
}

Rat block_volume_sq(const Basis& b, BlockRange r) {
  b.check_range(r);
  return block_volume_sq(gso_compute(b), r);
}

WindowGso window_gso(const GsoData& g, BlockRange r) {
  int rk = r.rank();
  WindowGso w;
  w.mu.assign(rk, {});
  w.w.resize(rk);
  for (int t = 0; t < rk; ++t) {
    int i = r.lo - 1 + t;
    w.w[t] = g.norm_sq[i];
    w.mu[t].resize(t);
    for (int s = 0; s < t; ++s) w.mu[t][s] = g.mu[i][r.lo - 1 + s];
  }
  return w;
}

ScaledBasis projected_block(const Basis& b, BlockRange r) {
  b.check_range(r);
  auto g = gso_compute(b);
  int m = b.rows();
  int lo = r.lo - 1;
  // Explicit rational GSO vectors b*_0 .. b*_{hi-1}.
  std::vector<std::vector<Rat>> star(r.hi, std::vector<Rat>(m));
  for (int i = 0; i < r.hi; ++i) {
    for (int t = 0; t < m; ++t) star[i][t] = Rat(b.at(t, i));
    for (int j = 0; j < i; ++j)
      for (int t = 0; t < m; ++t) star[i][t] -= g.mu[i][j] * star[j][t];
  }
  // pi_lo(b_i) = sum_{j=lo..i} mu_{i,j} b*_j  (mu_{i,i} = 1).
  std::vector<std::vector<Rat>> cols(r.rank(), std::vector<Rat>(m, Rat(0)));
  Int denom_lcm = 1;
  for (int t = 0; t < r.rank(); ++t) {
    int i = lo + t;
    for (int j = lo; j <= i; ++j) {
      Rat mu = (j == i) ? Rat(1) : g.mu[i][j];
      for (int s = 0; s < m; ++s) cols[t][s] += mu * star[j][s];
    }
    for (int s = 0; s < m; ++s)
      mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
              cols[t][s].get_den().get_mpz_t());
  }
  ScaledBasis out;
  out.scale = denom_lcm;
  std::vector<std::vector<Int>> icols(r.rank(), std::vector<Int>(m));
  for (int t = 0; t < r.rank(); ++t)
    for (int s = 0; s < m; ++s) {
      Rat v = cols[t][s] * Rat(denom_lcm);
      icols[t][s] = v.get_num();  // denominator is 1 by construction
    }
  out.basis = Basis::from_columns(std::move(icols));
  return out;
}

}  // namespace latred
