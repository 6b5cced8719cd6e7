#pragma once

#include "latred/block_reduce.hpp"

namespace latred {

struct DbkzParams {
  int k = 2;               // block size, 2 <= k
  long long tours = 0;     // 0 = derive from the tour-count formula
  Rat eps = Rat(1, 10);    // slack in the output bound
  Rat delta = Rat(1);      // oracle approximation factor (exact oracle here)
  bool stop_at_fixed_point = true;  // skip remaining tours once a full
                                    // tour leaves the basis unchanged
};

struct DbkzReport {
  long long oracle_calls = 0;
  long long tours_run = 0;
  long long tours_budget = 0;
  // per tour: max_i |x_i / y_i - 1| of the sublattice-volume trace from
  // the convergence argument (diagnostic, double precision)
  std::vector<double> tour_dev;
};

// Tour count ceil((2 n^2 / (k-1)^2) * log2(n log2(5||B||) / eps)),
// evaluated as a sound integer upper bound. Any larger value is valid.
long long dbkz_default_tours(const Basis& b, int window_rank, int k,
                             const Rat& eps);

// N tours of forward SVP sweeps and backward DSVP sweeps over rank-k
// blocks, then a final SVP reduction of the first block. Output first
// vector satisfies ||b_1|| <= (1+eps) (delta^2 gamma_k)^{(n-1)/(2(k-1))}
// vol^{1/n} using exactly N(2n-2k+1)+1 oracle calls (fewer only via the
// fixed-point early exit).
Basis dbkz_reduce(Basis b, const DbkzParams& p, OracleBudget& budget,
                  DbkzReport* report = nullptr);

// DBKZ confined to the projected block B_[r.lo, r.hi] (rank k+q, q >= 1;
// plain SVP reduction when the block rank equals k). Makes the block
// (1+eps) (delta^2 gamma_k)^{(rank-1)/(2(k-1))}-HSVP-reduced.
Basis hsvp_reduce_block(Basis b, BlockRange r, int k, const Rat& eps,
                        OracleBudget& budget, DbkzReport* report = nullptr);

// Same on the reversed dual of the block, via DBKZ on the materialized
// scaled dual, with slack (1+eps)^{1/2} realized by running at eps/3.
Basis dhsvp_reduce_block(Basis b, BlockRange r, int k, const Rat& eps,
                         OracleBudget& budget, DbkzReport* report = nullptr);

}  // namespace latred
