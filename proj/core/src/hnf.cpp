#include "latred/hnf.hpp"

namespace latred {

IntMat unimodular_completion_first_col(const std::vector<Int>& z) {
  int n = static_cast<int>(z.size());
  if (n == 0) throw ParamError("completion: empty vector");
  std::vector<Int> v = z;
  IntMat w(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) w[i][i] = 1;
  // Row ops drive v to (g,0,...,0); each op E on v multiplies w by E^{-1}
  // on the right, so w tracks the inverse transform and ends with first
  // column z.
  auto col_addmul = [&](int dst, int src, const Int& q) {
    for (int t = 0; t < n; ++t) w[t][dst] += q * w[t][src];
  };
  auto col_swap = [&](int a, int b2) {
    for (int t = 0; t < n; ++t) std::swap(w[t][a], w[t][b2]);
  };
  for (int i = 1; i < n; ++i) {
    while (v[i] != 0) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), v[0].get_mpz_t(), v[i].get_mpz_t());
      if (q != 0) {
        v[0] -= q * v[i];
        col_addmul(i, 0, q);
      }
      std::swap(v[0], v[i]);
      col_swap(0, i);
    }
  }
  if (v[0] == -1) {
    v[0] = 1;
    for (int t = 0; t < n; ++t) w[t][0] = -w[t][0];
  }
  if (v[0] != 1) throw ParamError("completion: vector is not primitive");
  return w;
}

static std::vector<Int> reversed(const std::vector<Int>& y) {
  return std::vector<Int>(y.rbegin(), y.rend());
}

IntMat dual_insert_transform(const std::vector<Int>& y) {
  int n = static_cast<int>(y.size());
  IntMat m = unimodular_completion_first_col(reversed(y));
  // m^T has first row = reversed(y); rotate rows so it becomes the last.
  IntMat w(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[(i + n - 1) % n][j] = m[j][i];
  return mat_inverse_unimodular(w);
}

Int mat_det(IntMat a) {
  int n = static_cast<int>(a.size());
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

IntMat mat_inverse_unimodular(const IntMat& a) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = Rat(a[i][j]);
    aug[i][n + i] = 1;
  }
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && aug[p][k] == 0) ++p;
    if (p == n) throw ParamError("mat_inverse: singular matrix");
    if (p != k) std::swap(aug[p], aug[k]);
    Rat piv = aug[k][k];
    for (int j = 0; j < 2 * n; ++j) aug[k][j] /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == k || aug[i][k] == 0) continue;
      Rat f = aug[i][k];
      for (int j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[k][j];
    }
  }
  IntMat inv(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& v = aug[i][n + j];
      if (v.get_den() != 1)
        throw ParamError("mat_inverse: matrix is not unimodular");
      inv[i][j] = v.get_num();
    }
  return inv;
}

// Gaussian elimination over Q on the normal equations (A^T A) c = A^T x.
static std::vector<Rat> solve_normal(const Basis& a,
                                     const std::vector<Rat>& rhs) {
  int n = a.cols();
  auto gram = a.gram();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(gram[i][j]);
    m[i][n] = rhs[i];
  }
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) throw ParamError("solve: rank-deficient system");
    if (p != k) std::swap(m[p], m[k]);
    Rat piv = m[k][k];
    for (int j = k; j <= n; ++j) m[k][j] /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rat f = m[i][k];
      for (int j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  std::vector<Rat> c(n);
  for (int i = 0; i < n; ++i) c[i] = m[i][n];
  return c;
}

std::vector<Int> solve_integral(const Basis& a, const std::vector<Int>& x) {
  int n = a.cols(), m = a.rows();
  if (static_cast<int>(x.size()) != m)
    throw ParamError("solve: dimension mismatch");
  std::vector<Rat> rhs(n, Rat(0));
  for (int j = 0; j < n; ++j) {
    Int s = 0;
    for (int t = 0; t < m; ++t) s += a.at(t, j) * x[t];
    rhs[j] = Rat(s);
  }
  auto c = solve_normal(a, rhs);
  std::vector<Int> out(n);
  for (int j = 0; j < n; ++j) {
    if (c[j].get_den() != 1)
      throw ParamError("solve: non-integral coefficient");
    out[j] = c[j].get_num();
  }
  // Normal equations are only necessary; confirm A c = x.
  for (int t = 0; t < m; ++t) {
    Int s = 0;
    for (int j = 0; j < n; ++j) s += a.at(t, j) * out[j];
    if (s != x[t]) throw ParamError("solve: inconsistent system");
  }
  return out;
}

IntMat solve_integral_cols(const Basis& a, const Basis& x) {
  if (a.rows() != x.rows()) throw ParamError("solve: dimension mismatch");
  IntMat t(a.cols(), std::vector<Int>(x.cols()));
  for (int j = 0; j < x.cols(); ++j) {
    auto c = solve_integral(a, x.column(j));
    for (int i = 0; i < a.cols(); ++i) t[i][j] = c[i];
  }
  return t;
}

}  // namespace latred
