#include "vball/ballean.hpp"
#include "vball/presets.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_EntouragePowerCold(benchmark::State& state) {
  const vball::EffectiveEntourage e{1, static_cast<std::uint32_t>(state.range(1))};
  for (auto _ : state) {
    const auto b =
        vball::preset_ballean("line", static_cast<std::uint32_t>(state.range(0)));
    benchmark::DoNotOptimize(b.entourage(e).pair_count());
  }
}

void BM_EntourageMemoized(benchmark::State& state) {
  const auto b = vball::preset_ballean("line", static_cast<std::uint32_t>(state.range(0)));
  const vball::EffectiveEntourage e{1, static_cast<std::uint32_t>(state.range(1))};
  b.entourage(e);
  for (auto _ : state) {
    benchmark::DoNotOptimize(b.entourage(e).pair_count());
  }
}

void BM_CheckAxioms(benchmark::State& state) {
  const auto b = vball::preset_ballean("line", static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(vball::check_axioms(b).ok());
  }
}

}  // namespace

BENCHMARK(BM_EntouragePowerCold)->Args({8, 2})->Args({16, 3})->Args({32, 4});
BENCHMARK(BM_EntourageMemoized)->Args({16, 3})->Args({32, 4});
BENCHMARK(BM_CheckAxioms)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
