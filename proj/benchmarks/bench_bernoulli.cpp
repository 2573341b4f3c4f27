#include <benchmark/benchmark.h>

#include "ladder/bernoulli.hpp"

using namespace ladder;

namespace {

void BM_bernoulli_mod_p(benchmark::State& state) {
  u32 p = static_cast<u32>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bernoulli_mod_p(p));
  }
}
BENCHMARK(BM_bernoulli_mod_p)->Arg(691)->Arg(2003)->Arg(4999);

void BM_scan_irregular(benchmark::State& state) {
  u32 pmax = static_cast<u32>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_irregular(pmax));
  }
}
BENCHMARK(BM_scan_irregular)->Arg(200)->Arg(700)->Arg(1000);

}  // namespace
