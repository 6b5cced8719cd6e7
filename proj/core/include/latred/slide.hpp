#pragma once

#include <string>

#include "latred/dbkz.hpp"

namespace latred {

struct SlideParams {
  int k = 2;
  Rat delta = Rat(1);
  Rat eps = Rat(1, 8);  // termination slack, > 0
};

// P(B) sampled once per outer pass: vol(B_[1,q])^2 in the small regime,
// prod_i vol(B_[1,ik+q])^2 in the large regime. Accepted dual steps are
// the only changers.
struct PotentialSample {
  long long pass = 0;
  Int potential;
  std::string changed_by;  // empty when the pass left P(B) unchanged
};

struct PotentialTrace {
  std::vector<PotentialSample> samples;
};

struct ReductionReport {
  long long oracle_calls = 0;       // SVP/DSVP block steps at slide level
  long long dbkz_invocations = 0;   // HSVP/DHSVP engine runs
  long long dbkz_oracle_calls = 0;  // oracle calls inside those runs
  long long passes = 0;
  double ms = 0;
};

struct SlideResult {
  Basis basis;
  PotentialTrace trace;
  ReductionReport report;
};

// Slide reduction for n = k+q, 2 <= q <= k: alternates SVP reduction of
// B_[1,q] and the tail blocks B_[i,n] with a conditional DSVP step on
// B_[2,q+1], until vol(B_[1,q])^2 survives a whole pass unchanged.
// Output is ((1+eps) delta, k)-slide-reduced.
SlideResult slide_reduce_small(Basis b, const SlideParams& p,
                               OracleBudget& budget);

// Slide reduction for n = pk+q >= 2k: DBKZ-based Mordell steps on the
// oversized first block, SVP sweeps over the rank-k blocks, conditional
// DSVP steps on the shifted dual blocks.
SlideResult slide_reduce_large(Basis b, const SlideParams& p,
                               OracleBudget& budget);

struct ApproxSvpResult {
  ShortestVectorResult vec;  // coefficients relative to the input basis
  int k = 0;                 // block size the reduction chose
  int q = 0;                 // q = 0 marks the direct-oracle fallback
  Basis reduced;             // the slide-reduced basis behind the answer
  ReductionReport report;
};

// delta'-SVP via slide reduction with k = ceil(n/(2c)), c in (1/2, 1],
// plus one more oracle call on B_[1,k].
ApproxSvpResult approx_svp_small(const Basis& b, const Rat& c,
                                 const Rat& delta, OracleBudget& budget);

// c >= 1: k = floor(n/(c+1)), slide-reduce, then the small-regime
// procedure on L(B_[1,2k]); returns the shorter of b_1 and that vector.
ApproxSvpResult approx_svp_large(const Basis& b, const Rat& c,
                                 const Rat& delta, OracleBudget& budget);

}  // namespace latred
