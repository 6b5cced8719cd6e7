#pragma once

#include <vector>

#include "latred/basis.hpp"

namespace latred {

// Exact Gram-Schmidt data of a basis: mu[i][j] for j < i (the diagonal is
// implicitly 1) and norm_sq[i] = ||b*_i||^2. Satisfies the recomposition
// identity b_i = b*_i + sum_{j<i} mu_{i,j} b*_j exactly.
struct GsoData {
  std::vector<std::vector<Rat>> mu;  // row i has i entries, j = 0..i-1
  std::vector<Rat> norm_sq;

  int rank() const { return static_cast<int>(norm_sq.size()); }
  // mu with 1-indexed (i,j), j <= i, diagonal 1.
  Rat mu_at(int i, int j) const {
    return i == j ? Rat(1) : mu[i - 1][j - 1];
  }
};

// Throws ParamError if some ||b*_i||^2 vanishes (rank-deficient input).
GsoData gso_compute(const Basis& b);

// Same lattice, all |mu_{i,j}| <= 1/2, GSO norms unchanged.
Basis size_reduce(Basis b);

// prod_{i in r} ||b*_i||^2 = Gram determinant of the projected block.
Rat block_volume_sq(const Basis& b, BlockRange r);
Rat block_volume_sq(const GsoData& g, BlockRange r);

// GSO of the projected block B_[lo,hi] relative to pi_lo: the slice of the
// full-basis GSO with indices in the window, reindexed from 0.
struct WindowGso {
  std::vector<std::vector<Rat>> mu;  // r x r strict lower triangle
  std::vector<Rat> w;                // ||b*_{lo+t}||^2

  int rank() const { return static_cast<int>(w.size()); }
};

WindowGso window_gso(const GsoData& g, BlockRange r);

// The projected block B_[lo,hi] as an explicit integer matrix plus
// denominator: column t of the result, divided by scale, equals
// pi_lo(b_{lo+t}). All reduction predicates are invariant under the
// scaling, so the scaled basis can be fed back into any routine here.
ScaledBasis projected_block(const Basis& b, BlockRange r);

}  // namespace latred
