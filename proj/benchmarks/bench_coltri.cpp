#include <benchmark/benchmark.h>

#include "coltri/census.hpp"
#include "coltri/constructions.hpp"
#include "coltri/dipoles.hpp"
#include "coltri/homology.hpp"
#include "coltri/random.hpp"
#include "coltri/residues.hpp"

using namespace coltri;

namespace {

ColourfulGraph construction(int d, std::size_t k) {
  Rng rng(k);
  return build_manifold(random_params(d, k, rng)).graph;
}

void BM_KappaTable(benchmark::State& state) {
  const auto g = random_graph(4, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(KappaTable(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KappaTable)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_PropertyP(benchmark::State& state) {
  const auto g = construction(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(has_property_P(g));
}
BENCHMARK(BM_PropertyP)->RangeMultiplier(4)->Range(1, 256);

void BM_MelonicReduce(benchmark::State& state) {
  const auto g = construction(4, static_cast<std::size_t>(state.range(0))).without_colour(5);
  for (auto _ : state) benchmark::DoNotOptimize(melonic_reduce(g));
}
BENCHMARK(BM_MelonicReduce)->RangeMultiplier(2)->Range(1, 16);

void BM_BettiExact(benchmark::State& state) {
  const auto g = construction(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(g, g.all_colours()));
}
BENCHMARK(BM_BettiExact)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_BettiModP(benchmark::State& state) {
  const auto g = construction(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(betti_numbers(g, g.all_colours(), RankMethod::ModP));
  }
}
BENCHMARK(BM_BettiModP)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  CensusOptions options;
  options.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate(3, static_cast<std::size_t>(state.range(0)), options));
  }
}
BENCHMARK(BM_Census)->Args({6, 1})->Args({6, 0})->Unit(benchmark::kMillisecond);

void BM_BuildManifold(benchmark::State& state) {
  Rng rng(3);
  const auto params = random_params(3, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(build_manifold(params));
}
BENCHMARK(BM_BuildManifold)->RangeMultiplier(4)->Range(1, 1024);

}  // namespace

BENCHMARK_MAIN();
