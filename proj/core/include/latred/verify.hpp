#pragma once

#include <string>

#include "latred/bound.hpp"
#include "latred/enumerate.hpp"

namespace latred {

// Exact checkers for every reduction predicate and proven inequality.
// Everything here is decided by integer-power clearing of denominators;
// there are no tolerance parameters. Checkers that need lambda_1 report
// `inapplicable` above the enumeration rank cap rather than passing
// vacuously.

enum class CheckStatus { pass, fail, inapplicable };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string witness;  // set on fail (violated index, both sides) or inapplicable (reason)

  bool passed() const { return status == CheckStatus::pass; }
  bool failed() const { return status == CheckStatus::fail; }
  std::string to_line() const;
};

CheckResult is_size_reduced(const Basis& b);
CheckResult is_lll_reduced(const Basis& b, const Rat& eps);

CheckResult is_svp_reduced(const Basis& b, BlockRange r, const Bound& delta,
                           int max_rank = kDefaultMaxRank);
CheckResult is_hsvp_reduced(const Basis& b, BlockRange r, const Bound& delta_h);
CheckResult is_dsvp_reduced(const Basis& b, BlockRange r, const Bound& delta,
                            int max_rank = kDefaultMaxRank);
CheckResult is_dhsvp_reduced(const Basis& b, BlockRange r, const Bound& delta_h);

// B_[1,d] delta-HSVP-reduced and B_[2,d+1] delta-DHSVP-reduced.
CheckResult is_twin_reduced(const Basis& b, int d, const Bound& delta);

// GSO decay and volume sandwich implied by twin reduction, checked on the
// leading rank-(d+1) block. Inapplicable unless is_twin_reduced passes.
CheckResult check_twin_fact(const Basis& b, int d, const Bound& delta);

// Both items of the gluing lemma at split d: hypotheses are checked
// first; with hypotheses true the conclusion must hold.
CheckResult check_gluing(const Basis& b, int d, const Bound& alpha,
                         const Bound& beta, const Bound& eta,
                         int max_rank = kDefaultMaxRank);

// Slide-reduction definitions (n <= 2k and n >= 2k regimes).
CheckResult is_slide_reduced_small(const Basis& b, int k, const Bound& delta,
                                   int max_rank = kDefaultMaxRank);
CheckResult is_slide_reduced_large(const Basis& b, int k, const Bound& delta,
                                   int max_rank = kDefaultMaxRank);

// lambda_1(L(B_[1,k])) bound guaranteed for slide-reduced bases in the
// small regime; lambda1_sq is ground truth for the whole lattice.
CheckResult check_thm_small(const Basis& b, int k, const Bound& delta,
                            const Rat& lambda1_sq,
                            int max_rank = kDefaultMaxRank);

// HSVP bound on b_1 (always) and the SVP bound under the guard
// lambda_1(L(B_[1,k+q])) > lambda_1(L), decided by enumeration.
CheckResult check_thm_large(const Basis& b, int k, const Bound& delta,
                            int max_rank = kDefaultMaxRank);

// GSO decay across blocks, HSVP form and SVP form on B_[d+1,n] for a
// basis slide-reduced in the large regime with first block of rank d.
CheckResult check_appendix(const Basis& b, int d, int k, const Bound& delta,
                           int max_rank = kDefaultMaxRank);

// Assembled squared approximation-factor bounds for the end-to-end
// reductions, with the slack eps = 1/n the algorithms run at.
// Small regime: delta^4 gamma_k ((1+1/n)^2 delta^2 gamma_q)^{(q+1)(n-k)/((q-1)k)};
// q = 0 marks the direct-oracle fallback with plain delta^2.
Bound approx_svp_small_bound_sq(int n, int k, int q, const Rat& delta);
// Large regime, case lambda_1(L(B_[1,k+q])) > lambda_1(L): the slide
// theorem's SVP branch at slack 1+1/n.
Bound approx_svp_large_bound_sq_guard_true(int n, int k, const Rat& delta);
// Large regime, other case: the rank-2k small-regime bound that covers
// the extra oracle vector.
Bound approx_svp_large_bound_sq_guard_false(int k, const Rat& delta);

}  // namespace latred
