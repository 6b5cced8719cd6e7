#include "latred/block_reduce.hpp"

#include "latred/dual.hpp"
#include "latred/lll.hpp"

namespace latred {

void apply_window_transform(Basis& b, BlockRange r, const IntMat& v) {
  int rk = r.rank();
  int lo = r.lo - 1;
  int m = b.rows();
  std::vector<std::vector<Int>> fresh(rk, std::vector<Int>(m, 0));
  for (int j = 0; j < rk; ++j)
    for (int t = 0; t < rk; ++t) {
      const Int& c = v[t][j];
      if (c == 0) continue;
      for (int i = 0; i < m; ++i) fresh[j][i] += c * b.at(i, lo + t);
    }
  for (int j = 0; j < rk; ++j)
    for (int i = 0; i < m; ++i) b.at(i, lo + j) = std::move(fresh[j][i]);
}

Basis svp_reduce_block(Basis b, BlockRange r, OracleBudget& budget,
                       const Rat& delta) {
  b.check_range(r);
  if (delta < 1) throw ParamError("svp_reduce_block: delta must be >= 1");
  int lo = r.lo - 1;

  Basis work = b;
  lll_window(work, r, Rat(1, 3));
  GsoData g = gso_compute(work);
  ShortestVectorResult sv = enumerate_gso(window_gso(g, r), budget);

  // Already delta-SVP-reduced? Judge the input block, not the LLL copy.
  Rat w_lo_in = (work == b) ? g.norm_sq[lo] : gso_compute(b).norm_sq[lo];
  if (w_lo_in <= delta * delta * sv.norm_sq) return size_reduce(std::move(b));

  IntMat u = unimodular_completion_first_col(sv.coeffs);
  apply_window_transform(work, r, u);
  lll_window(work, r, Rat(1, 3));
  return size_reduce(std::move(work));
}

Basis dsvp_reduce_block(Basis b, BlockRange r, OracleBudget& budget,
                        const Rat& delta) {
  b.check_range(r);
  if (delta < 1) throw ParamError("dsvp_reduce_block: delta must be >= 1");
  Rat third(1, 3);

  Basis work = b;
  bool lll_ok = window_is_lll_reduced(b, r, third);
  if (!lll_ok) lll_window(work, r, third);

  ShortestVectorResult dsv = dual_block_shortest(work, r, budget);
  // First vector of the reversed dual has norm 1/||b*_hi||.
  Rat w_hi = gso_compute(work).norm_sq[r.hi - 1];
  if (Rat(1) / w_hi <= delta * delta * dsv.norm_sq)
    return size_reduce(std::move(work));

  IntMat v = dual_insert_transform(dsv.coeffs);
  apply_window_transform(work, r, v);
  // Restore 1/3-LLL-reducedness; LLL never decreases the last window GSO
  // norm, which the insertion just made maximal, so the dual stays
  // SVP-reduced.
  lll_window(work, r, third);
  return size_reduce(std::move(work));
}

}  // namespace latred
