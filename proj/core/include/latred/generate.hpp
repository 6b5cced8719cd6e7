#pragma once

#include <cstdint>
#include <string>

#include "latred/basis.hpp"

namespace latred {

enum class GenFamily { identity, uniform, knapsack, scrambled_diagonal };

GenFamily parse_family(const std::string& name);
std::string family_name(GenFamily f);

struct GenSpec {
  GenFamily family = GenFamily::uniform;
  int n = 4;
  int m = 0;  // 0 means m = n
  long bound = 5;
  std::uint64_t seed = 1;
};

// Deterministic full-rank basis; degenerate draws re-roll
// with a counter mixed into the seed.
Basis generate(const GenSpec& spec);

// diag(d_1..d_n) scrambled by seeded unimodular column operations; the
// Gram determinant stays (prod d_i)^2.
Basis scrambled_diagonal_basis(const std::vector<Int>& diag,
                               std::uint64_t seed);

}  // namespace latred
