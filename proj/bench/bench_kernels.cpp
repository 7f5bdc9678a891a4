// Serial reference vs OpenMP kernels, and end-to-end solver scaling.
//
//   ./tropsched_bench --benchmark_filter=Closure
//   OMP_NUM_THREADS=8 ./tropsched_bench

#include <benchmark/benchmark.h>

#include "support/generators.hpp"
#include "tropsched/kernels.hpp"

using namespace tropsched;
namespace k = tropsched::kernels;

namespace {

template <class Num>
Matrix<Num> dense(std::size_t n, std::uint64_t seed) {
  gen::Rng rng(seed);
  return gen::matrix<Num>(rng, n, n, -50, 50, 0.1);
}

// Forward lags only, so the closure never meets a positive cycle.
template <class Num>
Matrix<Num> acyclic(std::size_t n) {
  gen::Rng rng(n);
  Matrix<Num> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (rng.chance(0.5)) a(i, j) = Scalar<Num>::of(rng.uniform(0, 9));
  return a;
}

template <class Num, bool Parallel>
void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = dense<Num>(n, 2 * n), b = dense<Num>(n, 2 * n + 1);
  for (auto _ : state) {
    auto c = Parallel ? k::parallel::multiply(a, b) : k::serial::multiply(a, b);
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(state.range(0));
}

template <class Num, bool Parallel>
void BM_Closure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = acyclic<Num>(n);
  for (auto _ : state) {
    auto c = Parallel ? k::parallel::closure(a) : k::serial::closure(a);
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(state.range(0));
}

void BM_SolveMakespan(benchmark::State& state) {
  gen::Rng rng(7);
  const auto inst = gen::large_project(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto fam = solve_makespan(inst);
    benchmark::DoNotOptimize(fam);
  }
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_Multiply<double, false>)->Name("Multiply/float/serial")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_Multiply<double, true>)->Name("Multiply/float/parallel")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_Multiply<Rational, false>)->Name("Multiply/exact/serial")->RangeMultiplier(2)->Range(32, 128);
BENCHMARK(BM_Multiply<Rational, true>)->Name("Multiply/exact/parallel")->RangeMultiplier(2)->Range(32, 128);
BENCHMARK(BM_Closure<double, false>)->Name("Closure/float/serial")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_Closure<double, true>)->Name("Closure/float/parallel")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_Closure<Rational, false>)->Name("Closure/exact/serial")->RangeMultiplier(2)->Range(32, 128);
BENCHMARK(BM_Closure<Rational, true>)->Name("Closure/exact/parallel")->RangeMultiplier(2)->Range(32, 128);
BENCHMARK(BM_SolveMakespan)->Name("SolveMakespan/exact")->RangeMultiplier(2)->Range(25, 200)->Complexity(
    benchmark::oNCubed)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
