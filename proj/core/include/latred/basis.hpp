#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "latred/rational.hpp"

namespace latred {

// 1-indexed inclusive index pair naming a projected block B_[lo,hi].
struct BlockRange {
  int lo = 1;
  int hi = 1;
  int rank() const { return hi - lo + 1; }
};

// A lattice basis: n linearly independent column vectors in Z^m. Every
// transformation applied by this library is a unimodular column operation,
// so L(B) and the full Gram determinant are invariants.
class Basis {
 public:
  Basis() = default;
  Basis(int m, int n);
  static Basis identity(int n);
  static Basis from_columns(std::vector<std::vector<Int>> cols);
  static Basis from_rows(const std::vector<std::vector<Int>>& rows);

  int rows() const { return m_; }  // ambient dimension m
  int cols() const { return n_; }  // rank n

  Int& at(int row, int col) { return cols_[col][row]; }
  const Int& at(int row, int col) const { return cols_[col][row]; }
  const std::vector<Int>& column(int col) const { return cols_[col]; }

  // b_dst += c * b_src
  void col_addmul(int dst, int src, const Int& c);
  void col_swap(int a, int b);
  void col_negate(int j);

  Int dot(int i, int j) const;               // <b_i, b_j>
  std::vector<std::vector<Int>> gram() const;
  Int norm_sq(int j) const { return dot(j, j); }
  Int max_norm_sq() const;                    // ||B||^2 = max_j ||b_j||^2

  // det(B^T B), exact. Positive iff the columns are independent.
  Int gram_det() const;

  void check_range(BlockRange r) const;

  bool operator==(const Basis&) const = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<std::vector<Int>> cols_;
};

// A rational matrix held as an integer basis plus a positive denominator:
// the represented columns are basis.column(j) / scale.
struct ScaledBasis {
  Basis basis;
  Int scale = 1;
};

// vol(B_[1,j])^2 for j = 1..n, i.e. the leading principal minors of the
// Gram matrix. Exact integers; trailing zeros indicate dependent columns.
std::vector<Int> leading_gram_minors(const Basis& b);

// Text format: line 1 is "n m", then n lines of m integers, one basis
// vector per line (vectors are stored as rows in the file, columns in
// memory), ASCII, LF line endings.
Basis parse_basis(std::istream& in);
Basis parse_basis_text(const std::string& text);
Basis read_basis_file(const std::string& path);
void write_basis(std::ostream& out, const Basis& b);
std::string basis_to_text(const Basis& b);
void write_basis_file(const std::string& path, const Basis& b);

}  // namespace latred
