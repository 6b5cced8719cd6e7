#pragma once

#include "latred/enumerate.hpp"
#include "latred/hnf.hpp"

namespace latred {

// delta-SVP-reduce the projected block B_[lo,hi] with the exact
// enumeration oracle (one oracle call). Returns a size-reduced basis of
// the same lattice whose block starts with a shortest projected vector;
// columns outside the window receive no unimodular update. If the block
// already satisfies ||b*_lo|| <= delta * lambda_1, the input comes back
// untouched apart from size reduction.
Basis svp_reduce_block(Basis b, BlockRange r, OracleBudget& budget,
                       const Rat& delta = Rat(1));

// delta-DSVP-reduce the block: reversed dual of B_[lo,hi] becomes
// delta-SVP-reduced and the block 1/3-LLL-reduced (one oracle call).
Basis dsvp_reduce_block(Basis b, BlockRange r, OracleBudget& budget,
                        const Rat& delta = Rat(1));

// Replace the window columns by window * v (v unimodular, row-major).
void apply_window_transform(Basis& b, BlockRange r, const IntMat& v);

}  // namespace latred
