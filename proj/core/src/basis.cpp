#include "latred/basis.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace latred {

double log2_rat(const Rat& x) {
  if (x <= 0) throw ParamError("log2_rat: argument must be positive");
  long en, ed;
  double dn = mpz_get_d_2exp(&en, x.get_num().get_mpz_t());
  double dd = mpz_get_d_2exp(&ed, x.get_den().get_mpz_t());
  return (std::log2(dn) + static_cast<double>(en)) -
         (std::log2(dd) + static_cast<double>(ed));
}

Basis::Basis(int m, int n) : m_(m), n_(n), cols_(n, std::vector<Int>(m, 0)) {
  if (m < 1 || n < 1 || m < n)
    throw ParamError("basis: need m >= n >= 1");
}

Basis Basis::identity(int n) {
  Basis b(n, n);
  for (int i = 0; i < n; ++i) b.at(i, i) = 1;
  return b;
}

Basis Basis::from_columns(std::vector<std::vector<Int>> cols) {
  if (cols.empty() || cols[0].empty())
    throw ParamError("basis: empty column set");
  Basis b(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (auto& c : cols)
    if (c.size() != cols[0].size())
      throw ParamError("basis: ragged columns");
  b.cols_ = std::move(cols);
  return b;
}

Basis Basis::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty() || rows[0].empty())
    throw ParamError("basis: empty row set");
  int n = static_cast<int>(rows.size());
  int m = static_cast<int>(rows[0].size());
  Basis b(m, n);
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(rows[j].size()) != m)
      throw ParamError("basis: ragged rows");
    for (int i = 0; i < m; ++i) b.at(i, j) = rows[j][i];
  }
  return b;
}

void Basis::col_addmul(int dst, int src, const Int& c) {
  if (dst == src) throw ParamError("col_addmul: dst == src");
  if (c == 0) return;
  auto& d = cols_[dst];
  const auto& s = cols_[src];
  for (int i = 0; i < m_; ++i) d[i] += c * s[i];
}

void Basis::col_swap(int a, int b) { std::swap(cols_[a], cols_[b]); }

void Basis::col_negate(int j) {
  for (auto& x : cols_[j]) x = -x;
}

Int Basis::dot(int i, int j) const {
  Int s = 0;
  const auto& a = cols_[i];
  const auto& b = cols_[j];
  for (int t = 0; t < m_; ++t) s += a[t] * b[t];
  return s;
}

std::vector<std::vector<Int>> Basis::gram() const {
  std::vector<std::vector<Int>> g(n_, std::vector<Int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j <= i; ++j) {
      g[i][j] = dot(i, j);
      g[j][i] = g[i][j];
    }
  return g;
}

Int Basis::max_norm_sq() const {
  Int best = 0;
  for (int j = 0; j < n_; ++j) {
    Int v = dot(j, j);
    if (v > best) best = v;
  }
  return best;
}

// Bareiss fraction-free elimination on the Gram matrix. After step k the
// pivot a[k][k] equals the Gram determinant of the first k+1 columns, so
// this yields every leading principal minor. A Gram matrix with a zero
// leading minor has a dependent column prefix, hence a singular whole.
static std::vector<Int> gram_leading_minors(std::vector<std::vector<Int>> a) {
  int n = static_cast<int>(a.size());
  std::vector<Int> minors(n, 0);
  Int prev = 1;
  minors[0] = a[0][0];
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) return minors;  // rest stay 0
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
    minors[k + 1] = a[k + 1][k + 1];
  }
  return minors;
}

Int Basis::gram_det() const { return gram_leading_minors(gram()).back(); }

std::vector<Int> leading_gram_minors(const Basis& b) {
  return gram_leading_minors(b.gram());
}

void Basis::check_range(BlockRange r) const {
  if (r.lo < 1 || r.lo > r.hi || r.hi > n_)
    throw ParamError("block range [" + std::to_string(r.lo) + "," +
                     std::to_string(r.hi) + "] out of bounds for rank " +
                     std::to_string(n_));
}

Basis parse_basis(std::istream& in) {
  long n = 0, m = 0;
  if (!(in >> n >> m)) throw ParseError("basis header: expected 'n m'");
  if (n < 1 || m < n || m > 4096)
    throw ParseError("basis header: need 1 <= n <= m (got n=" +
                     std::to_string(n) + ", m=" + std::to_string(m) + ")");
  std::vector<std::vector<Int>> rows(n, std::vector<Int>(m));
  for (long j = 0; j < n; ++j)
    for (long i = 0; i < m; ++i) {
      std::string tok;
      if (!(in >> tok)) throw ParseError("basis body: truncated input");
      try {
        rows[j][i] = Int(tok);
      } catch (const std::invalid_argument&) {
        throw ParseError("basis body: bad integer '" + tok + "'");
      }
    }
  return Basis::from_rows(rows);
}

Basis parse_basis_text(const std::string& text) {
  std::istringstream ss(text);
  return parse_basis(ss);
}

Basis read_basis_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open basis file: " + path);
  return parse_basis(f);
}

void write_basis(std::ostream& out, const Basis& b) {
  out << b.cols() << ' ' << b.rows() << '\n';
  for (int j = 0; j < b.cols(); ++j) {
    for (int i = 0; i < b.rows(); ++i) {
      if (i) out << ' ';
      out << b.at(i, j);
    }
    out << '\n';
  }
}

std::string basis_to_text(const Basis& b) {
  std::ostringstream ss;
  write_basis(ss, b);
  return ss.str();
}

void write_basis_file(const std::string& path, const Basis& b) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot open output file: " + path);
  write_basis(f, b);
}

}  // namespace latred
