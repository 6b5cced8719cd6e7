#include <benchmark/benchmark.h>

#include "latred/dbkz.hpp"
#include "latred/generate.hpp"
#include "latred/lll.hpp"
#include "latred/slide.hpp"

using namespace latred;

namespace {

Basis bench_basis(int n, std::uint64_t seed = 42) {
  GenSpec gs{GenFamily::uniform, n, 0, 5, seed};
  return generate(gs);
}

void BM_gso(benchmark::State& state) {
  Basis b = bench_basis(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gso_compute(b));
}
BENCHMARK(BM_gso)->Arg(8)->Arg(16)->Arg(24);

void BM_size_reduce(benchmark::State& state) {
  Basis b = bench_basis(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(size_reduce(b));
}
BENCHMARK(BM_size_reduce)->Arg(8)->Arg(16);

void BM_lll(benchmark::State& state) {
  Basis b = bench_basis(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lll_reduce(b, Rat(1, 3)));
}
BENCHMARK(BM_lll)->Arg(8)->Arg(12)->Arg(16);

// The enumeration kernel dominates every oracle call; this is the
// exact-arithmetic hot path.
void BM_enumerate(benchmark::State& state) {
  Basis b = bench_basis(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    OracleBudget bud;
    benchmark::DoNotOptimize(enumerate_shortest(b, bud));
  }
}
BENCHMARK(BM_enumerate)->Arg(8)->Arg(12)->Arg(15);

void BM_svp_reduce_block(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Basis b = bench_basis(n);
  for (auto _ : state) {
    OracleBudget bud;
    benchmark::DoNotOptimize(svp_reduce_block(b, {2, n}, bud));
  }
}
BENCHMARK(BM_svp_reduce_block)->Arg(8)->Arg(12);

void BM_dsvp_reduce_block(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Basis b = bench_basis(n);
  for (auto _ : state) {
    OracleBudget bud;
    benchmark::DoNotOptimize(dsvp_reduce_block(b, {1, n - 1}, bud));
  }
}
BENCHMARK(BM_dsvp_reduce_block)->Arg(8)->Arg(12);

void BM_dbkz(benchmark::State& state) {
  Basis b = bench_basis(static_cast<int>(state.range(0)));
  DbkzParams p;
  p.k = 4;
  for (auto _ : state) {
    OracleBudget bud;
    benchmark::DoNotOptimize(dbkz_reduce(b, p, bud));
  }
}
BENCHMARK(BM_dbkz)->Arg(10)->Arg(14);

void BM_slide_small(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Basis b = bench_basis(n);
  SlideParams p;
  p.k = (n + 1) / 2 + 1;
  p.eps = Rat(1, 8);
  for (auto _ : state) {
    OracleBudget bud;
    benchmark::DoNotOptimize(slide_reduce_small(b, p, bud));
  }
}
BENCHMARK(BM_slide_small)->Arg(8)->Arg(12);

void BM_slide_large(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Basis b = bench_basis(n);
  SlideParams p;
  p.k = 4;
  p.eps = Rat(1, 10);
  for (auto _ : state) {
    OracleBudget bud;
    benchmark::DoNotOptimize(slide_reduce_large(b, p, bud));
  }
}
BENCHMARK(BM_slide_large)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
