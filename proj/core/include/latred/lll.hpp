#pragma once

#include "latred/gso.hpp"

namespace latred {

// eps-LLL reduction, Lovasz condition in the classical form
//   ||b*_{i-1}||^2 <= (1+eps) ||mu_{i,i-1} b*_{i-1} + b*_i||^2.
// eps = 1/3 corresponds to the textbook delta = 3/4.
Basis lll_reduce(Basis b, const Rat& eps);

// In-place LLL of the projected block B_[r.lo, r.hi]; all column
// operations stay inside the window, so the block lattice and everything
// outside the window are preserved. Never decreases the last window GSO
// norm and never increases the window GSO maximum.
void lll_window(Basis& b, BlockRange r, const Rat& eps);

// Lovasz + size-reduction check on the window, no modification.
bool window_is_lll_reduced(const Basis& b, BlockRange r, const Rat& eps);

}  // namespace latred
