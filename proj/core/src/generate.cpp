#include "latred/generate.hpp"

namespace latred {

namespace {

// splitmix64: tiny, stable across platforms, good enough for test
// instance generation.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) {  // inclusive
    return lo +
           static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t counter) {
  return seed * 0x100000001b3ULL + counter;
}

Basis gen_identity(int n, int m) {
  std::vector<std::vector<Int>> cols(n, std::vector<Int>(m, 0));
  for (int j = 0; j < n; ++j) cols[j][j] = 1;
  return Basis::from_columns(std::move(cols));
}

Basis gen_uniform(const GenSpec& s, int m) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(mix(s.seed, attempt));
    std::vector<std::vector<Int>> cols(s.n, std::vector<Int>(m));
    for (int j = 0; j < s.n; ++j)
      for (int i = 0; i < m; ++i)
        cols[j][i] = Int(rng.range(-s.bound, s.bound));
    Basis b = Basis::from_columns(std::move(cols));
    if (b.gram_det() != 0) return b;
  }
}

Basis gen_knapsack(const GenSpec& s, int m) {
  if (m != s.n)
    throw ParamError("knapsack family expects m = n");
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(mix(s.seed, attempt));
    std::vector<std::vector<Int>> cols(s.n, std::vector<Int>(s.n, 0));
    for (int j = 0; j + 1 < s.n; ++j) cols[j][j] = 1;
    for (int i = 0; i < s.n; ++i) cols[s.n - 1][i] = Int(rng.range(-s.bound, s.bound));
    if (cols[s.n - 1][s.n - 1] == 0) continue;  // full rank needs a_n != 0
    return Basis::from_columns(std::move(cols));
  }
}

}  // namespace

GenFamily parse_family(const std::string& name) {
  if (name == "identity") return GenFamily::identity;
  if (name == "uniform") return GenFamily::uniform;
  if (name == "knapsack") return GenFamily::knapsack;
  if (name == "scrambled-diagonal") return GenFamily::scrambled_diagonal;
  throw ParamError("unknown generator family: " + name);
}

std::string family_name(GenFamily f) {
  switch (f) {
    case GenFamily::identity: return "identity";
    case GenFamily::uniform: return "uniform";
    case GenFamily::knapsack: return "knapsack";
    default: return "scrambled-diagonal";
  }
}

Basis scrambled_diagonal_basis(const std::vector<Int>& diag,
                               std::uint64_t seed) {
  int n = static_cast<int>(diag.size());
  std::vector<std::vector<Int>> cols(n, std::vector<Int>(n, 0));
  for (int j = 0; j < n; ++j) {
    if (diag[j] == 0) throw ParamError("scrambled diagonal: zero entry");
    cols[j][j] = diag[j];
  }
  Basis b = Basis::from_columns(std::move(cols));
  Rng rng(seed);
  for (int round = 0; round < 3 * n; ++round) {
    int i = static_cast<int>(rng.range(0, n - 1));
    int j = static_cast<int>(rng.range(0, n - 1));
    long coef = rng.range(-2, 2);
    if (i != j && coef != 0) b.col_addmul(j, i, Int(coef));
    if (rng.range(0, 3) == 0) {
      int a = static_cast<int>(rng.range(0, n - 1));
      if (a != j) b.col_swap(a, j);
    }
    if (rng.range(0, 4) == 0) b.col_negate(static_cast<int>(rng.range(0, n - 1)));
  }
  return b;
}

Basis generate(const GenSpec& s) {
  if (s.n < 1) throw ParamError("generate: n must be >= 1");
  int m = s.m == 0 ? s.n : s.m;
  if (m < s.n) throw ParamError("generate: need m >= n");
  if (s.bound < 1 && s.family != GenFamily::identity)
    throw ParamError("generate: bound must be >= 1");
  switch (s.family) {
    case GenFamily::identity:
      return gen_identity(s.n, m);
    case GenFamily::uniform:
      return gen_uniform(s, m);
    case GenFamily::knapsack:
      return gen_knapsack(s, m);
    case GenFamily::scrambled_diagonal: {
      if (m != s.n)
        throw ParamError("scrambled-diagonal family expects m = n");
      Rng rng(mix(s.seed, 0x5ca1ab1e));
      std::vector<Int> diag(s.n);
      for (auto& d : diag) d = Int(rng.range(1, s.bound));
      return scrambled_diagonal_basis(diag, s.seed);
    }
  }
  throw ParamError("generate: unreachable family");
}

}  // namespace latred
