#include <benchmark/benchmark.h>

#include "instanton/construct.hpp"
#include "instanton/linalg.hpp"
#include "instanton/membership.hpp"
#include "instanton/monad.hpp"

using namespace instanton;

static void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  const Matrix<Fp> m = rng.matrix(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(64)->Arg(128);

static void BM_CohomologyTable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Monad m = build_monad(sample_invertible(n, 11), n);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_table(m, -4, 2));
}
BENCHMARK(BM_CohomologyTable)->Arg(1)->Arg(2)->Arg(3);

static void BM_Membership(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Hyperweb a = sample_invertible(n, 13);
  for (auto _ : state) benchmark::DoNotOptimize(check_membership(a, n, {100, 2, 1}));
}
BENCHMARK(BM_Membership)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK_MAIN();
