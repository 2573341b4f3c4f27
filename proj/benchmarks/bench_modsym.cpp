#include <benchmark/benchmark.h>

#include "ladder/modular_symbols.hpp"

using namespace ladder;

namespace {

void BM_build_space(benchmark::State& state) {
  u32 k = static_cast<u32>(state.range(0));
  u32 p = static_cast<u32>(next_prime(10 * k));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_space(p, k));
  }
}
BENCHMARK(BM_build_space)->Arg(12)->Arg(60)->Arg(130)->Arg(300);

void BM_hecke_matrix(benchmark::State& state) {
  u32 ell = static_cast<u32>(state.range(0));
  SymbolSpace s = build_space(691, 60);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hecke_matrix(s, ell));
  }
}
BENCHMARK(BM_hecke_matrix)->Arg(2)->Arg(13)->Arg(31);

void BM_eisenstein_line(benchmark::State& state) {
  // the weight-12 congruence pair
  SymbolSpace s = build_space(691, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eisenstein_line(s));
  }
}
BENCHMARK(BM_eisenstein_line);

}  // namespace
