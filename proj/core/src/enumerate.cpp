#include "latred/enumerate.hpp"

#include "latred/dual.hpp"
#include "latred/hnf.hpp"
#include "latred/lll.hpp"

namespace latred {

namespace {

// Sign-normalize so the first nonzero coefficient is positive.
void normalize_sign(std::vector<Int>& z) {
  for (const Int& v : z) {
    if (v == 0) continue;
    if (v < 0)
      for (Int& x : z) x = -x;
    return;
  }
}

bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

struct Enumerator {
  const WindowGso& g;
  int r;
  std::vector<Int> z;
  std::vector<Rat> zr;    // z as rationals, kept in sync
  std::vector<Rat> dist;  // dist[t]: partial norm over levels t..r-1
  Rat best;
  std::vector<Int> best_z;
  int nonzero = 0;

  explicit Enumerator(const WindowGso& gso)
      : g(gso),
        r(gso.rank()),
        z(r, 0),
        zr(r, Rat(0)),
        dist(r + 1, Rat(0)),
        best(gso.w[0]),
        best_z(r, 0) {
    best_z[0] = 1;  // the first block vector itself, norm w[0]
  }

  // Sum_{i>t} z_i mu_{i,t}: the offset of the b*_t coordinate.
  Rat center_sum(int t) const {
    Rat s(0);
    for (int i = t + 1; i < r; ++i) {
      if (z[i] == 0) continue;
      s += zr[i] * g.mu[i][t];
    }
    return s;
  }

  void record(const Rat& norm) {
    if (nonzero == 0) return;  // the zero vector
    int c = cmp(norm, best);
    if (c > 0) return;
    std::vector<Int> cand = z;
    normalize_sign(cand);
    if (c < 0 || lex_less(cand, best_z)) {
      best = norm;
      best_z = std::move(cand);
    }
  }

  void set_z(int t, const Int& cand) {
    if ((z[t] == 0) != (cand == 0)) nonzero += (cand == 0) ? -1 : 1;
    z[t] = cand;
    zr[t] = Rat(cand);
  }

  void descend(int t) {
    Rat s = center_sum(t);
    Int z0 = round_nearest(-s);
    // Children ordered by |z + s|: z0 first, then the nearer frontier on
    // either side. Contributions are nondecreasing along this order, so
    // the first child over the bound ends the level.
    Int up = z0 + 1, down = z0 - 1;
    bool first = true;
    while (true) {
      Int cand;
      if (first) {
        cand = z0;
        first = false;
      } else {
        Rat du = Rat(up) + s;
        Rat dd = -(Rat(down) + s);
        cand = (cmp(du, dd) <= 0) ? up++ : down--;
      }
      Rat val = Rat(cand) + s;
      Rat nd = dist[t + 1] + val * val * g.w[t];
      if (nd > best) break;
      set_z(t, cand);
      dist[t] = nd;
      if (t == 0)
        record(nd);
      else
        descend(t - 1);
    }
    set_z(t, 0);  // leave no residue for the next sibling subtree
  }

  ShortestVectorResult run() {
    descend(r - 1);
    return {best_z, best};
  }
};

}  // namespace

ShortestVectorResult enumerate_gso(const WindowGso& g, OracleBudget& budget) {
  int r = g.rank();
  if (r < 1) throw ParamError("enumerate: empty block");
  if (r > budget.max_rank)
    throw BudgetError("enumerate: rank " + std::to_string(r) +
                      " exceeds cap " + std::to_string(budget.max_rank));
  ++budget.calls;
  Enumerator e(g);
  return e.run();
}

ShortestVectorResult enumerate_shortest(const Basis& b, OracleBudget& budget) {
  Basis c = lll_reduce(b, Rat(1, 3));
  WindowGso wg = window_gso(gso_compute(c), BlockRange{1, c.cols()});
  ShortestVectorResult res = enumerate_gso(wg, budget);
  if (c == b) {
    normalize_sign(res.coeffs);
    return res;
  }
  std::vector<Int> u(b.rows(), 0);
  for (int j = 0; j < c.cols(); ++j) {
    if (res.coeffs[j] == 0) continue;
    for (int i = 0; i < b.rows(); ++i) u[i] += res.coeffs[j] * c.at(i, j);
  }
  std::vector<Int> coeffs = solve_integral(b, u);
  normalize_sign(coeffs);
  return {coeffs, res.norm_sq};
}

Rat lambda1_sq(const Basis& b, OracleBudget& budget) {
  return enumerate_shortest(b, budget).norm_sq;
}

Rat block_lambda1_sq(const Basis& b, BlockRange r, OracleBudget& budget) {
  b.check_range(r);
  Basis c = b;
  lll_window(c, r, Rat(1, 3));
  WindowGso wg = window_gso(gso_compute(c), r);
  return enumerate_gso(wg, budget).norm_sq;
}

ShortestVectorResult dual_block_shortest(const Basis& b, BlockRange r,
                                         OracleBudget& budget) {
  b.check_range(r);
  ScaledBasis pb = projected_block(b, r);
  ScaledBasis rd = reversed_dual(pb.basis);
  ShortestVectorResult res = enumerate_shortest(rd.basis, budget);
  // true dual columns are (pb.scale / rd.scale) times rd columns
  Rat f = Rat(pb.scale) / Rat(rd.scale);
  res.norm_sq *= f * f;
  return res;
}

Rat dual_block_lambda1_sq(const Basis& b, BlockRange r, OracleBudget& budget) {
  return dual_block_shortest(b, r, budget).norm_sq;
}

}  // namespace latred
