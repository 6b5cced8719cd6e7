#include "latred/harness.hpp"

#include "latred/lll.hpp"

#include <chrono>
#include <sstream>

namespace latred {

std::string rat_str(const Rat& r) { return r.get_str(); }

namespace {

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

Rat default_eps(const std::string& algorithm, const Rat& given) {
  if (given != 0) return given;
  if (algorithm == "lll") return Rat(1, 3);
  if (algorithm == "dbkz") return Rat(1, 10);
  return Rat(1, 8);
}

struct ReportSink {
  std::ostringstream out;
  bool any_fail = false;

  void kv(const std::string& key, const std::string& value) {
    out << key << '=' << value << '\n';
  }
  void kv(const std::string& key, long long value) {
    out << key << '=' << value << '\n';
  }
  void check(const CheckResult& c) {
    if (c.failed()) any_fail = true;
    out << c.to_line() << '\n';
  }
};

void emit_trace(ReportSink& sink, const PotentialTrace& trace) {
  for (const auto& s : trace.samples)
    sink.out << "trace pass=" << s.pass << " potential=" << s.potential.get_str()
             << " changed=" << (s.changed_by.empty() ? "-" : s.changed_by)
             << '\n';
}

void emit_report(ReportSink& sink, const ReductionReport& r) {
  sink.kv("passes", r.passes);
  sink.kv("oracle_calls", r.oracle_calls);
  sink.kv("dbkz_invocations", r.dbkz_invocations);
  sink.kv("dbkz_oracle_calls", r.dbkz_oracle_calls);
  sink.kv("ms", fmt_ms(r.ms));
}

void verify_slide_small(ReportSink& sink, const Basis& b, int k,
                        const Rat& delta, const Rat& eps, int max_rank) {
  int n = b.cols();
  int q = n - k;
  Bound loose = Bound::rational((Rat(1) + eps) * delta);
  sink.check(is_slide_reduced_small(b, k, loose, max_rank));
  if (q >= 2) {
    if (n <= max_rank) {
      OracleBudget scratch{max_rank, 0};
      Rat lam = lambda1_sq(b, scratch);
      sink.check(check_thm_small(b, k, loose, lam, max_rank));
    }
    sink.check(check_twin_fact(b, q, loose * Bound::gamma(q).pow(1, 2)));
  }
}

void verify_slide_large(ReportSink& sink, const Basis& b, int k,
                        const Rat& delta, const Rat& eps, int max_rank) {
  int n = b.cols();
  int q = n - (n / k) * k;
  Bound loose = Bound::rational((Rat(1) + eps) * delta);
  sink.check(is_slide_reduced_large(b, k, loose, max_rank));
  sink.check(check_thm_large(b, k, loose, max_rank));
  sink.check(check_appendix(b, k + q, k, loose, max_rank));
}

}  // namespace

RunOutcome run(const RunConfig& cfg) {
  if (cfg.input_path.empty()) throw ParamError("run: no input path");
  Basis b = read_basis_file(cfg.input_path);
  int n = b.cols();
  Rat eps = default_eps(cfg.algorithm, cfg.eps);
  OracleBudget budget{cfg.max_rank, 0};

  ReportSink sink;
  sink.kv("algorithm", cfg.algorithm);
  sink.kv("n", n);
  sink.kv("m", b.rows());
  RunOutcome outcome;

  if (cfg.algorithm == "lll") {
    auto t0 = std::chrono::steady_clock::now();
    Basis r = lll_reduce(std::move(b), eps);
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    sink.kv("eps", rat_str(eps));
    sink.kv("ms", fmt_ms(ms));
    if (cfg.verify) {
      sink.check(is_size_reduced(r));
      sink.check(is_lll_reduced(r, eps));
    }
    outcome.output = std::move(r);
  } else if (cfg.algorithm == "dbkz") {
    if (cfg.k < 2 || cfg.k >= n) throw ParamError("dbkz: need 2 <= k < n");
    DbkzParams dp;
    dp.k = cfg.k;
    dp.eps = eps;
    dp.delta = cfg.delta;
    dp.tours = cfg.tours;
    DbkzReport rep;
    auto t0 = std::chrono::steady_clock::now();
    Basis r = dbkz_reduce(std::move(b), dp, budget, &rep);
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    sink.kv("k", cfg.k);
    sink.kv("delta", rat_str(cfg.delta));
    sink.kv("eps", rat_str(eps));
    sink.kv("tours_budget", rep.tours_budget);
    sink.kv("tours_run", rep.tours_run);
    sink.kv("oracle_calls", budget.calls);
    sink.kv("ms", fmt_ms(ms));
    if (cfg.trace) {
      for (size_t i = 0; i < rep.tour_dev.size(); ++i)
        sink.out << "trace tour=" << i + 1 << " max_dev=" << rep.tour_dev[i]
                 << '\n';
    }
    if (cfg.verify) {
      Bound hb = Bound::rational(Rat(1) + eps) *
                 (Bound::rational(cfg.delta).pow(2) * Bound::gamma(cfg.k))
                     .pow(n - 1, 2 * (cfg.k - 1));
      sink.check(is_size_reduced(r));
      sink.check(is_hsvp_reduced(r, {1, n}, hb));
    }
    outcome.output = std::move(r);
  } else if (cfg.algorithm == "slide-small" ||
             cfg.algorithm == "slide-large") {
    bool small = cfg.algorithm == "slide-small";
    SlideParams sp;
    sp.k = cfg.k;
    sp.delta = cfg.delta;
    sp.eps = eps;
    SlideResult sr = small ? slide_reduce_small(std::move(b), sp, budget)
                           : slide_reduce_large(std::move(b), sp, budget);
    sink.kv("k", cfg.k);
    sink.kv("q", small ? n - cfg.k : n - (n / cfg.k) * cfg.k);
    sink.kv("p", small ? 1 : n / cfg.k);
    sink.kv("delta", rat_str(cfg.delta));
    sink.kv("eps", rat_str(eps));
    emit_report(sink, sr.report);
    if (cfg.trace) emit_trace(sink, sr.trace);
    if (cfg.verify) {
      if (small)
        verify_slide_small(sink, sr.basis, cfg.k, cfg.delta, eps,
                           cfg.max_rank);
      else
        verify_slide_large(sink, sr.basis, cfg.k, cfg.delta, eps,
                           cfg.max_rank);
    }
    outcome.output = std::move(sr.basis);
  } else if (cfg.algorithm == "approx-svp-small" ||
             cfg.algorithm == "approx-svp-large") {
    bool small = cfg.algorithm == "approx-svp-small";
    ApproxSvpResult ar = small ? approx_svp_small(b, cfg.c, cfg.delta, budget)
                               : approx_svp_large(b, cfg.c, cfg.delta, budget);
    sink.kv("c", rat_str(cfg.c));
    sink.kv("k", ar.k);
    sink.kv("q", ar.q);
    sink.kv("delta", rat_str(cfg.delta));
    emit_report(sink, ar.report);
    sink.kv("norm_sq", rat_str(ar.vec.norm_sq));
    {
      std::ostringstream cs;
      for (size_t i = 0; i < ar.vec.coeffs.size(); ++i) {
        if (i) cs << ' ';
        cs << ar.vec.coeffs[i].get_str();
      }
      sink.kv("coeffs", cs.str());
    }
    if (cfg.verify) {
      if (n > cfg.max_rank) {
        sink.out << "INAPPLICABLE approx-ratio rank above cap\n";
      } else {
        OracleBudget scratch{cfg.max_rank, 0};
        Rat lam = lambda1_sq(b, scratch);
        Bound ratio = Bound::rational(ar.vec.norm_sq / lam);
        Bound bound;
        if (small) {
          bound = approx_svp_small_bound_sq(n, ar.k, ar.q, cfg.delta);
        } else {
          Rat lam_head =
              block_lambda1_sq(ar.reduced, {1, ar.k + ar.q}, scratch);
          bound = lam_head > lam
                      ? approx_svp_large_bound_sq_guard_true(n, ar.k, cfg.delta)
                      : approx_svp_large_bound_sq_guard_false(ar.k, cfg.delta);
        }
        CheckResult c = bound_le(ratio, bound)
                            ? CheckResult{"approx-ratio", CheckStatus::pass, ""}
                            : CheckResult{"approx-ratio", CheckStatus::fail,
                                          bound_witness(ratio, bound)};
        sink.check(c);
      }
    }
    // the found vector doubles as a rank-1 basis file
    outcome.output = Basis::from_columns({[&] {
      std::vector<Int> v(b.rows(), 0);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < b.rows(); ++i)
          v[i] += ar.vec.coeffs[j] * b.at(i, j);
      return v;
    }()});
  } else {
    throw ParamError("unknown algorithm: " + cfg.algorithm);
  }

  if (!cfg.output_path.empty()) write_basis_file(cfg.output_path, outcome.output);
  outcome.exit_code = sink.any_fail ? 1 : 0;
  sink.kv("status", sink.any_fail ? "FAIL" : "OK");
  outcome.report = sink.out.str();
  return outcome;
}

std::string bench_sweep(const BenchSpec& spec) {
  std::ostringstream csv;
  csv << "n,k,q,p,algorithm,delta,eps,ratio_sq_num,ratio_sq_den,bound_ok,"
         "oracle_calls,ms\n";
  bool approx = spec.algorithm == "approx-svp-small" ||
                spec.algorithm == "approx-svp-large";
  bool small = spec.algorithm == "approx-svp-small" ||
               spec.algorithm == "slide-small";
  std::vector<Rat> cs = spec.c_values;
  std::vector<int> ks = spec.k_values;
  if (approx && cs.empty()) throw ParamError("bench: approx needs c values");
  if (!approx && ks.empty()) throw ParamError("bench: needs k values");

  for (int n : spec.n_values) {
    if (n > spec.max_rank)
      throw ParamError("bench: n above max rank, lambda_1 not computable");
    size_t inner = approx ? cs.size() : ks.size();
    for (size_t t = 0; t < inner; ++t) {
      for (long long seed = 1; seed <= spec.seeds; ++seed) {
        GenSpec gs{spec.family, n, 0, spec.bound,
                   static_cast<std::uint64_t>(seed)};
        Basis b = generate(gs);
        OracleBudget budget{spec.max_rank, 0};
        OracleBudget scratch{spec.max_rank, 0};
        Rat lam = lambda1_sq(b, scratch);
        auto t0 = std::chrono::steady_clock::now();
        Rat ratio;
        bool bound_ok = false;
        long long calls = 0;
        int k = 0, q = 0, p = 0;
        if (approx) {
          Rat c = cs[t];
          ApproxSvpResult ar =
              small ? approx_svp_small(b, c, spec.delta, budget)
                    : approx_svp_large(b, c, spec.delta, budget);
          ratio = ar.vec.norm_sq / lam;
          k = ar.k;
          q = ar.q;
          p = small ? 1 : (ar.k > 0 ? n / ar.k : 0);
          Bound bound;
          if (small) {
            bound = approx_svp_small_bound_sq(n, ar.k, ar.q, spec.delta);
          } else {
            Rat lam_head = block_lambda1_sq(ar.reduced, {1, ar.k + ar.q},
                                            scratch);
            bound =
                lam_head > lam
                    ? approx_svp_large_bound_sq_guard_true(n, ar.k, spec.delta)
                    : approx_svp_large_bound_sq_guard_false(ar.k, spec.delta);
          }
          bound_ok = bound_le(Bound::rational(ratio), bound);
          calls = budget.calls;
        } else if (spec.algorithm == "dbkz") {
          k = ks[t];
          if (k < 2 || k >= n) continue;
          DbkzParams dp;
          dp.k = k;
          dp.eps = spec.eps;
          dp.delta = spec.delta;
          Basis r = dbkz_reduce(b, dp, budget);
          ratio = Rat(r.norm_sq(0)) / lam;
          Bound hb = Bound::rational(Rat(1) + spec.eps) *
                     (Bound::rational(spec.delta).pow(2) * Bound::gamma(k))
                         .pow(n - 1, 2 * (k - 1));
          bound_ok = is_hsvp_reduced(r, {1, n}, hb).passed();
          calls = budget.calls;
        } else if (spec.algorithm == "slide-small" ||
                   spec.algorithm == "slide-large") {
          k = ks[t];
          SlideParams sp;
          sp.k = k;
          sp.delta = spec.delta;
          sp.eps = spec.eps;
          Bound loose = Bound::rational((Rat(1) + spec.eps) * spec.delta);
          if (small) {
            q = n - k;
            p = 1;
            if (k < 2 || q < 2 || q > k) continue;
            SlideResult sr = slide_reduce_small(b, sp, budget);
            ratio = Rat(sr.basis.norm_sq(0)) / lam;
            bound_ok =
                check_thm_small(sr.basis, k, loose, lam, spec.max_rank)
                    .passed();
          } else {
            if (k < 2 || n < 2 * k) continue;
            p = n / k;
            q = n - p * k;
            SlideResult sr = slide_reduce_large(b, sp, budget);
            ratio = Rat(sr.basis.norm_sq(0)) / lam;
            bound_ok =
                check_thm_large(sr.basis, k, loose, spec.max_rank).passed();
          }
          calls = budget.calls;
        } else {
          throw ParamError("bench: unknown algorithm " + spec.algorithm);
        }
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        csv << n << ',' << k << ',' << q << ',' << p << ',' << spec.algorithm
            << ',' << rat_str(spec.delta) << ','
            << rat_str(approx ? Rat(1, n) : spec.eps) << ','
            << ratio.get_num().get_str() << ',' << ratio.get_den().get_str()
            << ',' << (bound_ok ? 1 : 0) << ',' << calls << ',' << fmt_ms(ms)
            << '\n';
      }
    }
  }
  return csv.str();
}

}  // namespace latred
