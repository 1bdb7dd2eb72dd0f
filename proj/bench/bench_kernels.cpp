// Serial reference vs OpenMP kernels. Run with --benchmark_filter=... to
// narrow down; sizes straddle the parallel cutoff.

#include <benchmark/benchmark.h>

#include <random>

#include "tropspec/kernels.hpp"
#include "tropspec/tropical_poly.hpp"

using namespace tropspec;

namespace {

TropMatrix random_matrix(int n, unsigned seed, bool nonneg) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> entry(nonneg ? 0 : -9, 9);
  std::uniform_int_distribution<int> pct(0, 99);
  TropMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (pct(gen) < 85) a.at(i, j) = TropScalar(Rational(entry(gen)));
  return a;
}

void bm_matmul_serial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TropMatrix a = random_matrix(n, 1, false), b = random_matrix(n, 2, false);
  for (auto _ : state) benchmark::DoNotOptimize(trop_matmul_serial(a, b));
}

void bm_matmul_parallel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TropMatrix a = random_matrix(n, 1, false), b = random_matrix(n, 2, false);
  for (auto _ : state) benchmark::DoNotOptimize(trop_matmul(a, b));
}

void bm_closure_serial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TropMatrix a = random_matrix(n, 3, true);
  for (auto _ : state) benchmark::DoNotOptimize(trop_plus_closure_serial(a));
}

void bm_closure_parallel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TropMatrix a = random_matrix(n, 3, true);
  for (auto _ : state) benchmark::DoNotOptimize(trop_plus_closure(a));
}

void bm_char_poly_brute(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TropMatrix a = random_matrix(n, 4, false);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_brute(a));
}

}  // namespace

BENCHMARK(bm_matmul_serial)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(bm_matmul_parallel)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(bm_closure_serial)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(bm_closure_parallel)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(bm_char_poly_brute)->Arg(8)->Arg(10)->Arg(12);

BENCHMARK_MAIN();
