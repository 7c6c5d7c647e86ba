#include "vball/free_vector.hpp"
#include "vball/membership.hpp"
#include "vball/presets.hpp"

#include <benchmark/benchmark.h>

namespace {

vball::FreeVector spread_vector(const vball::Ground& g) {
  std::map<vball::PointId, vball::Rational> coords;
  coords[g.at(0)] = vball::Rational(1);
  coords[g.at(g.size() - 1)] = vball::Rational(-1);
  if (g.size() > 2) coords[g.at(g.size() / 2)] = vball::Rational(1, 2);
  return vball::FreeVector(std::move(coords));
}

void BM_Membership(benchmark::State& state) {
  const auto b = vball::preset_ballean("line", static_cast<std::uint32_t>(state.range(0)));
  const vball::FreeVector v = spread_vector(b.ground());
  vball::IdealBaseParams params;
  params.n = static_cast<std::uint32_t>(state.range(1));
  params.entourage = {1, 2};
  params.z = b.ground().at(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vball::ideal_membership(b, v, params).member());
  }
}

void BM_MembershipPruned(benchmark::State& state) {
  const auto b = vball::preset_ballean("line", static_cast<std::uint32_t>(state.range(0)));
  const vball::FreeVector v = spread_vector(b.ground());
  vball::IdealBaseParams params;
  params.n = static_cast<std::uint32_t>(state.range(1));
  params.entourage = {1, 2};
  params.z = b.ground().at(0);
  const vball::MembershipOptions options{true};
  for (auto _ : state) {
    benchmark::DoNotOptimize(vball::ideal_membership(b, v, params, options).member());
  }
}

}  // namespace

BENCHMARK(BM_Membership)->Args({4, 2})->Args({5, 2})->Args({5, 3});
BENCHMARK(BM_MembershipPruned)->Args({4, 2})->Args({5, 2})->Args({5, 3});

BENCHMARK_MAIN();
