#pragma once

#include <string>
#include <vector>

#include "latred/generate.hpp"
#include "latred/slide.hpp"
#include "latred/verify.hpp"

namespace latred {

// Orchestration for the CLI: parse, dispatch, reduce, verify, report.
struct RunConfig {
  std::string algorithm;  // lll | dbkz | slide-small | slide-large |
                          // approx-svp-small | approx-svp-large
  int k = 0;
  Rat delta = Rat(1);
  Rat eps = Rat(0);  // 0 = per-algorithm default
  Rat c = Rat(1);    // approx-svp exponent target
  long long tours = 0;
  int max_rank = kDefaultMaxRank;
  bool verify = false;
  bool trace = false;
  std::string input_path;
  std::string output_path;  // empty = don't write
};

struct RunOutcome {
  int exit_code = 0;  // 0 ok, 1 verify failure (2/3 are raised, not returned)
  std::string report;
  Basis output;
};

RunOutcome run(const RunConfig& cfg);

// Desk-scale sweep: one row per (n, k or c, seed), CSV with header
// n,k,q,p,algorithm,delta,eps,ratio_sq_num,ratio_sq_den,bound_ok,oracle_calls,ms
struct BenchSpec {
  std::string algorithm = "approx-svp-small";
  std::vector<int> n_values;
  std::vector<int> k_values;  // used by dbkz / slide algorithms
  std::vector<Rat> c_values;  // used by approx-svp algorithms
  long long seeds = 1;        // seeds 1..seeds
  GenFamily family = GenFamily::uniform;
  long bound = 5;
  Rat delta = Rat(1);
  Rat eps = Rat(1, 10);
  int max_rank = kDefaultMaxRank;
};

std::string bench_sweep(const BenchSpec& spec);

std::string rat_str(const Rat& r);

}  // namespace latred
