#include <benchmark/benchmark.h>

#include "bianchi/jacobsthal.hpp"

using namespace bianchi;

namespace {

const i64 kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67};

// little_j memoises by pattern, so every iteration gets a fresh one: the
// window of n consecutive primes starting at the iteration index.
SievePattern window(std::size_t start, int n, int m_odd) {
  SievePattern p;
  for (int i = 0; i < n; ++i) {
    const i64 q = kPrimes[start + i];
    p.entries.push_back({q, q == 2 ? 1 : m_odd});
  }
  return p;
}

void BM_LittleJ(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(little_j(window(k++, n, 1)).value);
}
BENCHMARK(BM_LittleJ)->DenseRange(3, 8)->Iterations(8)->Unit(benchmark::kMillisecond);

// Two classes per odd prime, as for split primes dividing the content.
void BM_LittleJDoubled(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(little_j(window(k++, n, 2)).value);
}
BENCHMARK(BM_LittleJDoubled)->DenseRange(3, 5)->Iterations(8)->Unit(benchmark::kMillisecond);

void BM_TheoremJ(benchmark::State& state) {
  const Order o{Disc(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(theorem_J(o));
}
BENCHMARK(BM_TheoremJ)->Arg(-23)->Arg(-132)->Arg(-388)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
