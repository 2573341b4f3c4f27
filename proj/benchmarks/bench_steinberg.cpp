#include <benchmark/benchmark.h>

#include "ladder/steinberg.hpp"
#include "ladder/verify.hpp"

using namespace ladder;

namespace {

void BM_build_system(benchmark::State& state) {
  u32 p = static_cast<u32>(state.range(0));
  u32 k = static_cast<u32>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_system(p, k));
  }
}
BENCHMARK(BM_build_system)->Args({157, 62})->Args({691, 12})->Args({929, 820});

void BM_solve(benchmark::State& state) {
  u32 p = static_cast<u32>(state.range(0));
  u32 k = static_cast<u32>(state.range(1));
  SteinbergSystem sys = build_system(p, k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(sys));
  }
}
BENCHMARK(BM_solve)->Args({157, 62})->Args({691, 12})->Args({929, 820});

void BM_verify_pair(benchmark::State& state) {
  u32 p = static_cast<u32>(state.range(0));
  u32 k = static_cast<u32>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_pair(p, k));
  }
}
BENCHMARK(BM_verify_pair)->Args({37, 32})->Args({157, 110})->Args({691, 12})
    ->Unit(benchmark::kMillisecond);

}  // namespace
