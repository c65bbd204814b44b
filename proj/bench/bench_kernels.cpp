#include <benchmark/benchmark.h>

#include "pyracat/cells/multiplicity.hpp"
#include "pyracat/exactla/kernels.hpp"
#include "pyracat/pyramid/random.hpp"

namespace {

using namespace pyracat;

Matrix sample(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_integer_matrix(n, n, rng, 9);
}

void BM_MatmulSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = sample(n, 1), b = sample(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul_serial(a, b));
}
void BM_MatmulParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = sample(n, 1), b = sample(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul_parallel(a, b));
}
BENCHMARK(BM_MatmulSerial)->Arg(32)->Arg(96);
BENCHMARK(BM_MatmulParallel)->Arg(32)->Arg(96);

void BM_KronSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = sample(n, 3), b = sample(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::kron_serial(a, b));
}
void BM_KronParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = sample(n, 3), b = sample(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::kron_parallel(a, b));
}
BENCHMARK(BM_KronSerial)->Arg(8)->Arg(16);
BENCHMARK(BM_KronParallel)->Arg(8)->Arg(16);

void BM_RrefSerial(benchmark::State& state) {
  const Matrix a = sample(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rref_serial(a));
}
void BM_RrefParallel(benchmark::State& state) {
  const Matrix a = sample(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rref_parallel(a));
}
BENCHMARK(BM_RrefSerial)->Arg(24)->Arg(48);
BENCHMARK(BM_RrefParallel)->Arg(24)->Arg(48);

void BM_CensusSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_quasi_idempotents_serial(3, 3));
}
void BM_CensusParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_quasi_idempotents_parallel(3, 3));
}
BENCHMARK(BM_CensusSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
