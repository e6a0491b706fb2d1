#include <benchmark/benchmark.h>

#include "ddvv/ddvv.hpp"

namespace {

using namespace ddvv;

SymTuple make_tuple(Eigen::Index n, Eigen::Index m) {
  std::mt19937_64 rng = make_rng(derive_seed(1234, static_cast<std::uint64_t>(n * 100 + m)));
  return random_sym_tuple(n, m, rng);
}

void BM_CommutatorEnergy(benchmark::State& state) {
  const SymTuple t = make_tuple(state.range(0), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(commutator_energy(t));
  }
}
BENCHMARK(BM_CommutatorEnergy)
    ->Args({3, 3})->Args({6, 3})->Args({6, 6})->Args({12, 6});

void BM_DdvvResidual(benchmark::State& state) {
  const SymTuple t = make_tuple(state.range(0), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ddvv_residual(t).residual);
  }
}
BENCHMARK(BM_DdvvResidual)->Args({3, 3})->Args({6, 6});

void BM_Eq1aResidual(benchmark::State& state) {
  const SecondFundamentalForm f(make_tuple(state.range(0), state.range(1)), 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eq1a_residual(f).residual);
  }
}
BENCHMARK(BM_Eq1aResidual)->Args({3, 3})->Args({6, 6});

void BM_EuclideanGradient(benchmark::State& state) {
  const SymTuple t = make_tuple(state.range(0), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(euclidean_gradient(t));
  }
}
BENCHMARK(BM_EuclideanGradient)->Args({3, 3})->Args({6, 6});

void BM_Canonicalize(benchmark::State& state) {
  const SymTuple t = make_tuple(state.range(0), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonicalize(t));
  }
}
BENCHMARK(BM_Canonicalize)->Args({3, 3})->Args({6, 6});

void BM_MaximizeLambda(benchmark::State& state) {
  SearchOptions opts;
  opts.restarts = 1;
  opts.seed = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        maximize_lambda(state.range(0), state.range(1), opts).lambda);
  }
}
BENCHMARK(BM_MaximizeLambda)->Args({2, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
