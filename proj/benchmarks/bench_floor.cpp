#include <benchmark/benchmark.h>

#include "bianchi/bounds.hpp"
#include "bianchi/envelope.hpp"
#include "bianchi/swan.hpp"

using namespace bianchi;

namespace {

void BM_Candidates(benchmark::State& state) {
  const Order o{Disc(state.range(0))};
  const i64 cap = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(candidate_hemispheres(o, cap).size());
}
BENCHMARK(BM_Candidates)->Args({-23, 16})->Args({-132, 132})->Unit(benchmark::kMillisecond);

void BM_Envelope(benchmark::State& state) {
  const Order o{Disc(state.range(0))};
  const std::vector<Hemisphere> c = candidate_hemispheres(o, state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(floor_envelope(o, c, {}).faces().size());
  state.counters["sites"] = static_cast<double>(c.size());
}
BENCHMARK(BM_Envelope)->Args({-23, 16})->Args({-132, 132})->Args({-132, 528})
    ->Unit(benchmark::kMillisecond);

void BM_SwanNumber(benchmark::State& state) {
  SwanOptions opt;
  opt.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(swan_number(Disc(state.range(0)), opt).swanSq);
}
BENCHMARK(BM_SwanNumber)->Args({-23, 1})->Args({-132, 1})->Args({-132, 4})
    ->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_BoundsReport(benchmark::State& state) {
  for (auto _ : state) {
    JacobsthalSolver s{Order(Disc(state.range(0)))};
    benchmark::DoNotOptimize(bounds_report(s).J);
  }
}
BENCHMARK(BM_BoundsReport)->Arg(-23)->Arg(-388)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
