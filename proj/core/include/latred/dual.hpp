#pragma once

#include "latred/gso.hpp"

namespace latred {

// Reversed dual basis B^{-s} = B (B^T B)^{-1} with columns reversed,
// scaled to integers. The represented dual columns are basis.column(j) /
// scale; applying the operation twice recovers the original basis up to
// the scale. All reduction predicates are scale-invariant.
ScaledBasis reversed_dual(const Basis& b);

// GSO of the reversed dual of the block described by `wg`, computed
// without materializing the dual: with U the lower-unitriangular mu matrix
// of the block and r its rank,
//   mu^D[t][s] = (U^{-1})[r+1-s][r+1-t]   and   w^D[t] = 1 / w[r+1-t]
// (1-indexed). Exact rationals throughout.
WindowGso reversed_dual_gso(const WindowGso& wg);

}  // namespace latred
