#pragma once

#include <vector>

#include "latred/basis.hpp"

namespace latred {

using IntMat = std::vector<std::vector<Int>>;  // row-major, square unless noted

// Unimodular matrix whose first column is the primitive vector z, built by
// tracking the inverse of a gcd elimination (the same elimination that
// computes the Hermite normal form of a single column). Throws if z is not
// primitive.
IntMat unimodular_completion_first_col(const std::vector<Int>& z);

// The primal transform V realizing a dual insertion: y is the (primitive)
// coefficient vector of a target first vector for the reversed dual of a
// rank-r block. Applying V to the primal block columns makes the reversed
// dual basis start with that vector. Concretely V = W^{-1} where W is
// unimodular with last row equal to y reversed.
IntMat dual_insert_transform(const std::vector<Int>& y);

Int mat_det(IntMat a);  // Bareiss, exact
IntMat mat_inverse_unimodular(const IntMat& a);

// Exact coefficients c with A c = x; throws if the system is inconsistent
// or the solution is not integral. A must have full column rank.
std::vector<Int> solve_integral(const Basis& a, const std::vector<Int>& x);

// Columnwise variant: T with A T = X.
IntMat solve_integral_cols(const Basis& a, const Basis& x);

}  // namespace latred
