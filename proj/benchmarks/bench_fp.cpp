#include <benchmark/benchmark.h>

#include <random>

#include "ladder/fp_matrix.hpp"

using namespace ladder;

namespace {

FpMatrix random_matrix(u32 p, std::size_t rows, std::size_t cols) {
  std::mt19937_64 rng(rows * 1000003 + cols);
  std::uniform_int_distribution<u32> dist(0, p - 1);
  FpMatrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = dist(rng);
  return m;
}

void BM_rref(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  FpMatrix m = random_matrix(691, 2 * n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(m));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_rref)->RangeMultiplier(2)->Range(64, 512)->Complexity();

void BM_kernel_basis(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  // rank-deficient on purpose: wide matrix
  FpMatrix m = random_matrix(691, n / 2, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_basis(m));
  }
}
BENCHMARK(BM_kernel_basis)->RangeMultiplier(2)->Range(64, 512);

}  // namespace
