#include "latred/dual.hpp"

namespace latred {

// Adjugate of a symmetric positive definite integer matrix via rational
// inversion: adj(G) = det(G) * G^{-1}.
static std::vector<std::vector<Int>> gram_adjugate(
    const std::vector<std::vector<Int>>& gram, const Int& det) {
  int n = static_cast<int>(gram.size());
  // Gauss-Jordan over Q on [G | I].
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(gram[i][j]);
    a[i][n + i] = 1;
  }
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw ParamError("reversed_dual: singular Gram matrix");
    if (p != k) std::swap(a[p], a[k]);
    Rat piv = a[k][k];
    for (int j = k; j < 2 * n; ++j) a[k][j] /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k];
      for (int j = k; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<std::vector<Int>> adj(n, std::vector<Int>(n));
  Rat rdet(det);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = a[i][n + j] * rdet;
      if (v.get_den() != 1)
        throw ParamError("reversed_dual: adjugate not integral");
      adj[i][j] = v.get_num();
    }
  return adj;
}

ScaledBasis reversed_dual(const Basis& b) {
  int m = b.rows(), n = b.cols();
  auto gram = b.gram();
  Int det = b.gram_det();
  if (det == 0) throw ParamError("reversed_dual: rank-deficient basis");
  auto adj = gram_adjugate(gram, det);
  // det * B^{-s} = B * adj(G) with columns reversed.
  std::vector<std::vector<Int>> cols(n, std::vector<Int>(m, 0));
  for (int j = 0; j < n; ++j) {
    int src = n - 1 - j;  // column reversal
    for (int t = 0; t < n; ++t) {
      const Int& c = adj[t][src];
      if (c == 0) continue;
      for (int i = 0; i < m; ++i) cols[j][i] += c * b.at(i, t);
    }
  }
  // Normalize by the content gcd so the emitted pair is minimal.
  Int g = det;
  for (const auto& col : cols)
    for (const auto& x : col) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  ScaledBasis out;
  out.scale = det / g;
  for (auto& col : cols)
    for (auto& x : col) x /= g;
  out.basis = Basis::from_columns(std::move(cols));
  return out;
}

WindowGso reversed_dual_gso(const WindowGso& wg) {
  int r = wg.rank();
  // Invert the lower-unitriangular mu matrix by forward substitution.
  std::vector<std::vector<Rat>> inv(r, std::vector<Rat>(r, Rat(0)));
  for (int j = 0; j < r; ++j) {
    inv[j][j] = 1;
    for (int i = j + 1; i < r; ++i) {
      Rat s(0);
      for (int t = j; t < i; ++t) {
        Rat mu_it = wg.mu[i][t];
        s += mu_it * inv[t][j];
      }
      inv[i][j] = -s;
    }
  }
  WindowGso d;
  d.w.resize(r);
  d.mu.assign(r, {});
  for (int t = 0; t < r; ++t) {
    d.w[t] = Rat(1) / wg.w[r - 1 - t];
    d.mu[t].resize(t);
    for (int s = 0; s < t; ++s) d.mu[t][s] = inv[r - 1 - s][r - 1 - t];
  }
  return d;
}

}  // namespace latred
