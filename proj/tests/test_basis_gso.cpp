#include <doctest.h>

#include <sstream>

#include "latred/basis.hpp"
#include "latred/bound.hpp"
#include "latred/dual.hpp"
#include "latred/gso.hpp"
#include "latred/hermite.hpp"
#include "test_util.hpp"

using namespace latred;
using testutil::random_basis;

static Basis cols2(long a1, long a2, long b1, long b2) {
  return Basis::from_columns({{Int(a1), Int(a2)}, {Int(b1), Int(b2)}});
}

TEST_CASE("gso of identity") {
  auto g = gso_compute(Basis::identity(3));
  for (int i = 0; i < 3; ++i) {
    CHECK(g.norm_sq[i] == 1);
    for (int j = 0; j < i; ++j) CHECK(g.mu[i][j] == 0);
  }
}

TEST_CASE("gso forced by definition") {
  auto g = gso_compute(cols2(1, 0, 1, 1));
  CHECK(g.mu[1][0] == 1);
  CHECK(g.norm_sq[0] == 1);
  CHECK(g.norm_sq[1] == 1);
}

TEST_CASE("gso hand-computed 2x2") {
  Basis b = cols2(2, 1, 1, 2);
  auto g = gso_compute(b);
  CHECK(g.norm_sq[0] == 5);
  CHECK(g.norm_sq[1] == Rat(9, 5));
  CHECK(g.norm_sq[0] * g.norm_sq[1] == Rat(b.gram_det()));
}

TEST_CASE("gso rejects rank-deficient input") {
  Basis b = Basis::from_columns({{Int(1), Int(2)}, {Int(2), Int(4)}});
  CHECK_THROWS_AS(gso_compute(b), ParamError);
}

TEST_CASE("size_reduce examples") {
  CHECK(size_reduce(Basis::identity(4)) == Basis::identity(4));
  Basis b = cols2(1, 0, 1, 1);
  Basis r = size_reduce(b);
  CHECK(r == cols2(1, 0, 0, 1));
}

TEST_CASE("size_reduce properties over seeded bases") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    int n = 2 + static_cast<int>(seed % 5);
    Basis b = random_basis(seed, n, 6);
    Basis r = size_reduce(b);
    auto gb = gso_compute(b);
    auto gr = gso_compute(r);
    // GSO norms unchanged, lattice unchanged
    CHECK(gb.norm_sq == gr.norm_sq);
    CHECK(b.gram_det() == r.gram_det());
    // all |mu| <= 1/2
    Rat half(1, 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) CHECK(abs(gr.mu[i][j]) <= half);
    // idempotence
    CHECK(size_reduce(r) == r);
    // ||B|| <= sqrt(n) ||B*||
    Rat wmax(0);
    for (auto& w : gr.norm_sq)
      if (w > wmax) wmax = w;
    CHECK(Rat(r.max_norm_sq()) <= Rat(n) * wmax);
  }
}

TEST_CASE("block volumes") {
  CHECK(block_volume_sq(Basis::identity(4), {1, 4}) == 1);
  Basis b = cols2(2, 1, 1, 2);
  CHECK(block_volume_sq(b, {1, 2}) == 9);
  CHECK(block_volume_sq(b, {2, 2}) == Rat(9, 5));
  CHECK_THROWS_AS(block_volume_sq(b, {1, 3}), ParamError);
  CHECK_THROWS_AS(block_volume_sq(b, {0, 1}), ParamError);
}

TEST_CASE("volume multiplicativity and minors") {
  for (std::uint64_t seed = 50; seed < 70; ++seed) {
    int n = 3 + static_cast<int>(seed % 4);
    Basis b = random_basis(seed, n, 5);
    Rat total = block_volume_sq(b, {1, n});
    auto minors = leading_gram_minors(b);
    CHECK(total == Rat(minors[n - 1]));
    for (int d = 1; d < n; ++d) {
      CHECK(block_volume_sq(b, {1, d}) * block_volume_sq(b, {d + 1, n}) ==
            total);
      CHECK(block_volume_sq(b, {1, d}) == Rat(minors[d - 1]));
    }
  }
}

TEST_CASE("reversed dual examples") {
  // Dual of the identity is the identity; the column reversal is part of
  // the definition, so the matrix comes back with columns e_n .. e_1.
  auto d1 = reversed_dual(Basis::identity(3));
  CHECK(d1.scale == 1);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i)
      CHECK(d1.basis.at(i, j) == ((i + j == 2) ? 1 : 0));

  auto d2 = reversed_dual(Basis::from_columns({{Int(2)}}));
  CHECK(d2.basis.at(0, 0) == 1);
  CHECK(d2.scale == 2);

  Basis b = cols2(2, 1, 1, 2);
  auto d3 = reversed_dual(b);
  CHECK(d3.scale == 3);
  // <dual_j, b_i> * scale^-1 integral, and reversed pairing: dual column j
  // pairs to 1 with basis column n-1-j.
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) {
      Int ip = 0;
      for (int t = 0; t < 2; ++t) ip += d3.basis.at(t, j) * b.at(t, i);
      CHECK(ip % d3.scale == 0);
      CHECK(ip / d3.scale == ((i + j == 1) ? 1 : 0));
    }
}

TEST_CASE("dual involution up to scale") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    int n = 2 + static_cast<int>(seed % 4);
    Basis b = random_basis(seed, n, 5);
    auto d = reversed_dual(b);
    auto dd = reversed_dual(d.basis);
    // dd.basis / (dd.scale / d.scale) should equal b: check proportional
    REQUIRE(dd.basis.cols() == n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < b.rows(); ++i)
        CHECK(Rat(dd.basis.at(i, j)) * d.scale ==
              Rat(b.at(i, j)) * dd.scale);
  }
}

TEST_CASE("hermite table") {
  CHECK(hermite_upper_bound(1).gamma_pow_k == 1);
  CHECK(hermite_upper_bound(2).gamma_pow_k == Rat(4, 3));
  CHECK(hermite_upper_bound(8).gamma_pow_k == 256);
  CHECK(hermite_upper_bound(24).gamma_pow_k == pow_int(Int(4), 24));
  CHECK(hermite_upper_bound(8).exact);
  CHECK_FALSE(hermite_upper_bound(9).exact);
  CHECK_THROWS_AS(hermite_upper_bound(0), ParamError);
  // Minkowski-type bound dominates the exact table wherever both exist.
  for (int k : {1, 2, 3, 4, 5, 6, 7, 8, 24})
    CHECK(minkowski_gamma_pow_k(k) >= hermite_upper_bound(k).gamma_pow_k);
}

TEST_CASE("gamma_2 is tight for integer lattices") {
  // No rank-2 integer lattice beats the hexagonal ratio: 3 lambda^4 <= 4 det^2.
  for (std::uint64_t seed = 200; seed < 260; ++seed) {
    Basis b = random_basis(seed, 2, 4);
    Int l1 = testutil::brute_force_lambda1_sq(b);
    Int det = b.gram_det();
    CHECK(3 * l1 * l1 <= 4 * det);
  }
}

TEST_CASE("E8 witnesses gamma_8 = 2") {
  // Doubled E8 basis: integral, Gram det 2^16, lambda_1^2 = 8, so
  // lambda_1^2 / vol^{1/4} = 2 exactly.
  Basis e8 = Basis::from_rows({
      {4, 0, 0, 0, 0, 0, 0, 0},
      {-2, 2, 0, 0, 0, 0, 0, 0},
      {0, -2, 2, 0, 0, 0, 0, 0},
      {0, 0, -2, 2, 0, 0, 0, 0},
      {0, 0, 0, -2, 2, 0, 0, 0},
      {0, 0, 0, 0, -2, 2, 0, 0},
      {0, 0, 0, 0, 0, -2, 2, 0},
      {1, 1, 1, 1, 1, 1, 1, 1},
  });
  CHECK(e8.gram_det() == pow_int(Int(2), 16));
  // lambda_1^{2*8} == gamma_8^8 * vol^2 at equality
  Bound lhs = Bound::rational(Rat(8)).pow(8);
  Bound rhs = Bound::gamma(8).pow(8) * Bound::rational(Rat(e8.gram_det()));
  CHECK(bound_le(lhs, rhs));
  CHECK(bound_le(rhs, lhs));
}

TEST_CASE("bound comparator clears fractional exponents") {
  // gamma_3^3 = 2 exactly
  CHECK(bound_le(Bound::gamma(3).pow(3), Bound::rational(Rat(2))));
  CHECK(bound_le(Bound::rational(Rat(2)), Bound::gamma(3).pow(3)));
  // 2^{1/2} < 3^{1/2} < 2
  CHECK(bound_lt(Bound::rational(Rat(2)).pow(1, 2),
                 Bound::rational(Rat(3)).pow(1, 2)));
  CHECK(bound_lt(Bound::rational(Rat(3)).pow(1, 2), Bound::rational(Rat(2))));
  // negative exponents: 2^{-3/2} = (1/8)^{1/2}
  CHECK(bound_le(Bound::rational(Rat(2)).pow(-3, 2),
                 Bound::rational(Rat(1, 8)).pow(1, 2)));
  CHECK(bound_le(Bound::rational(Rat(1, 8)).pow(1, 2),
                 Bound::rational(Rat(2)).pow(-3, 2)));
}

TEST_CASE("basis text round-trip") {
  Basis b = cols2(2, 1, 1, 2);
  std::string t = basis_to_text(b);
  CHECK(t == "2 2\n2 1\n1 2\n");
  CHECK(parse_basis_text(t) == b);
  for (std::uint64_t seed = 300; seed < 330; ++seed) {
    Basis r = random_basis(seed, 2 + static_cast<int>(seed % 6), 50);
    CHECK(parse_basis_text(basis_to_text(r)) == r);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_basis_text("junk"), ParseError);
  CHECK_THROWS_AS(parse_basis_text("2 1\n1 0\n0 1\n"), ParseError);  // m < n
  CHECK_THROWS_AS(parse_basis_text("2 2\n1 0\n0"), ParseError);
  CHECK_THROWS_AS(parse_basis_text("2 2\n1 0\n0 x"), ParseError);
}
