// latred: exact lattice reduction toolkit CLI.
//
// Subcommands: gen, reduce, svp, verify, bench. Rational parameters are
// numerator/denominator flag pairs; no decimal parsing. Exit codes:
// 0 all checks pass, 1 check failure, 2 usage or parse error, 3 oracle
// budget exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "latred/harness.hpp"

using namespace latred;

namespace {

struct RatFlag {
  long long num = 1;
  long long den = 1;
  Rat value() const {
    if (den <= 0) throw ParamError("rational flag: denominator must be > 0");
    return Rat(static_cast<long>(num), static_cast<long>(den));
  }
};

void add_rat_flag(CLI::App* app, const std::string& name, RatFlag& f,
                  const std::string& help) {
  app->add_option("--" + name + "-num", f.num, help + " numerator");
  app->add_option("--" + name + "-den", f.den, help + " denominator");
}

std::vector<Rat> parse_rat_list(const std::vector<std::string>& items) {
  std::vector<Rat> out;
  for (const auto& s : items) {
    auto slash = s.find('/');
    long num = std::stol(s.substr(0, slash));
    long den = slash == std::string::npos ? 1 : std::stol(s.substr(slash + 1));
    if (den <= 0) throw ParamError("bad rational in list: " + s);
    out.emplace_back(num, den);
  }
  return out;
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ParseError("cannot open output file: " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"latred: slide reduction, DBKZ and exact SVP at desk scale"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a lattice basis file");
  std::string g_family = "uniform";
  GenSpec gs;
  std::string g_out;
  gen->add_option("--family", g_family,
                  "identity|uniform|knapsack|scrambled-diagonal");
  gen->add_option("--n", gs.n, "rank")->required();
  gen->add_option("--m", gs.m, "ambient dimension (default n)");
  gen->add_option("--bound", gs.bound, "entry bound");
  gen->add_option("--seed", gs.seed, "64-bit seed");
  gen->add_option("--out", g_out, "output path (default stdout)");

  // reduce
  auto* red = app.add_subcommand("reduce", "run a reduction algorithm");
  RunConfig rc;
  RatFlag r_delta, r_eps;
  red->add_option("--algorithm", rc.algorithm,
                  "lll|dbkz|slide-small|slide-large")
      ->required();
  red->add_option("--in", rc.input_path, "input basis file")->required();
  red->add_option("--out", rc.output_path, "output basis file");
  red->add_option("--k", rc.k, "block size");
  add_rat_flag(red, "delta", r_delta, "oracle approximation factor");
  add_rat_flag(red, "eps", r_eps, "slack");
  red->add_option("--tours", rc.tours, "DBKZ tour override");
  red->add_option("--max-rank", rc.max_rank, "enumeration rank cap");
  red->add_flag("--trace", rc.trace, "emit potential/tour trace lines");
  red->add_flag("--verify", rc.verify, "run the checkers on the output");

  // svp
  auto* svp = app.add_subcommand("svp", "approximate SVP via slide reduction");
  RunConfig sc;
  RatFlag s_delta, s_c;
  std::string s_regime = "auto";
  svp->add_option("--in", sc.input_path, "input basis file")->required();
  svp->add_option("--out", sc.output_path, "output vector file");
  add_rat_flag(svp, "c", s_c, "approximation exponent target");
  add_rat_flag(svp, "delta", s_delta, "oracle approximation factor");
  svp->add_option("--regime", s_regime, "small|large|auto");
  svp->add_option("--max-rank", sc.max_rank, "enumeration rank cap");
  svp->add_flag("--verify", sc.verify, "check the ratio against the bound");

  // verify
  auto* ver = app.add_subcommand("verify", "check predicates on a basis");
  std::string v_algorithm;
  std::string v_in;
  int v_k = 0;
  RatFlag v_delta, v_eps;
  int v_max_rank = kDefaultMaxRank;
  ver->add_option("--algorithm", v_algorithm,
                  "size|lll|slide-small|slide-large")
      ->required();
  ver->add_option("--in", v_in, "input basis file")->required();
  ver->add_option("--k", v_k, "block size");
  add_rat_flag(ver, "delta", v_delta, "predicate factor");
  add_rat_flag(ver, "eps", v_eps, "LLL slack");
  ver->add_option("--max-rank", v_max_rank, "enumeration rank cap");

  // bench
  auto* ben = app.add_subcommand("bench", "CSV sweep over (n, k or c, seed)");
  BenchSpec bs;
  std::vector<int> b_n, b_k;
  std::vector<std::string> b_c;
  std::string b_family = "uniform", b_out;
  RatFlag b_delta, b_eps{1, 10};
  ben->add_option("--algorithm", bs.algorithm,
                  "dbkz|slide-small|slide-large|approx-svp-small|approx-svp-large");
  ben->add_option("--n", b_n, "ranks")->required();
  ben->add_option("--k", b_k, "block sizes");
  ben->add_option("--c", b_c, "approximation exponents, as num or num/den");
  ben->add_option("--seeds", bs.seeds, "seed count (1..seeds)");
  ben->add_option("--family", b_family, "generator family");
  ben->add_option("--bound", bs.bound, "entry bound");
  add_rat_flag(ben, "delta", b_delta, "oracle factor");
  add_rat_flag(ben, "eps", b_eps, "slack");
  ben->add_option("--max-rank", bs.max_rank, "enumeration rank cap");
  ben->add_option("--out", b_out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage errors land on the documented code
  }

  try {
    if (gen->parsed()) {
      gs.family = parse_family(g_family);
      write_or_print(g_out, basis_to_text(generate(gs)));
      return 0;
    }
    if (red->parsed()) {
      rc.delta = r_delta.value();
      if (red->count("--eps-num") || red->count("--eps-den"))
        rc.eps = r_eps.value();
      RunOutcome o = run(rc);
      std::cout << o.report;
      return o.exit_code;
    }
    if (svp->parsed()) {
      sc.delta = s_delta.value();
      sc.c = s_c.value();
      if (s_regime == "small" || (s_regime == "auto" && sc.c <= 1))
        sc.algorithm = "approx-svp-small";
      else
        sc.algorithm = "approx-svp-large";
      RunOutcome o = run(sc);
      std::cout << o.report;
      return o.exit_code;
    }
    if (ver->parsed()) {
      Basis b = read_basis_file(v_in);
      std::vector<CheckResult> checks;
      Rat eps = (ver->count("--eps-num") || ver->count("--eps-den"))
                    ? v_eps.value()
                    : Rat(1, 3);
      if (v_algorithm == "size") {
        checks.push_back(is_size_reduced(b));
      } else if (v_algorithm == "lll") {
        checks.push_back(is_lll_reduced(b, eps));
      } else if (v_algorithm == "slide-small") {
        checks.push_back(is_slide_reduced_small(
            b, v_k, Bound::rational(v_delta.value()), v_max_rank));
      } else if (v_algorithm == "slide-large") {
        checks.push_back(is_slide_reduced_large(
            b, v_k, Bound::rational(v_delta.value()), v_max_rank));
      } else {
        throw ParamError("verify: unknown algorithm " + v_algorithm);
      }
      bool fail = false;
      for (const auto& c : checks) {
        std::cout << c.to_line() << '\n';
        fail |= c.failed();
      }
      return fail ? 1 : 0;
    }
    if (ben->parsed()) {
      bs.family = parse_family(b_family);
      bs.n_values = b_n;
      bs.k_values = b_k;
      bs.c_values = parse_rat_list(b_c);
      bs.delta = b_delta.value();
      bs.eps = b_eps.value();
      write_or_print(b_out, bench_sweep(bs));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << '\n';
    return 3;
  } catch (const ParamError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
