#pragma once

#include "latred/gso.hpp"

namespace latred {

inline constexpr int kDefaultMaxRank = 16;

// The cost model counts oracle invocations: every enumeration increments
// calls by exactly one. Enumerating a block of rank above max_rank is a
// budget error, never a silent approximation.
struct OracleBudget {
  int max_rank = kDefaultMaxRank;
  long long calls = 0;
};

struct ShortestVectorResult {
  std::vector<Int> coeffs;  // nonzero, primitive
  Rat norm_sq;              // exact lambda_1^2 of the enumerated lattice
};

// Exact shortest nonzero vector of the lattice described by a window GSO,
// depth-first with rational interval bounds and nearest-first child
// ordering. Among equal-norm minima returns the lexicographically
// smallest coefficient vector whose first nonzero entry is positive.
ShortestVectorResult enumerate_gso(const WindowGso& g, OracleBudget& budget);

// LLL-preprocesses a copy for pruning efficiency, then enumerates.
// Coefficients refer to the input basis.
ShortestVectorResult enumerate_shortest(const Basis& b, OracleBudget& budget);

Rat lambda1_sq(const Basis& b, OracleBudget& budget);

// lambda_1^2 of the projected block B_[lo,hi].
Rat block_lambda1_sq(const Basis& b, BlockRange r, OracleBudget& budget);

// Shortest vector of the reversed dual of the projected block B_[lo,hi]:
// coefficients are relative to the reversed dual basis columns, norm_sq is
// in true (unscaled) dual units.
ShortestVectorResult dual_block_shortest(const Basis& b, BlockRange r,
                                         OracleBudget& budget);

Rat dual_block_lambda1_sq(const Basis& b, BlockRange r, OracleBudget& budget);

}  // namespace latred
