#include <benchmark/benchmark.h>

#include <random>

#include "wedgecrys/exterior_linalg.hpp"
#include "wedgecrys/wedge_crystal.hpp"

using namespace wedgecrys;

namespace {

template <class R>
Matrix<R> random_square(const R& ring, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  Matrix<R> a(ring, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = ring.random(gen);
  return a;
}

void BM_CompoundZ27(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_square(ModulusRing(3, 3), n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(compound(a, n / 2));
}
BENCHMARK(BM_CompoundZ27)->DenseRange(4, 8, 2);

void BM_CompoundWitt(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_square(make_witt_ring(3, 2, 8), n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(compound(a, 2));
}
BENCHMARK(BM_CompoundWitt)->DenseRange(4, 8, 2);

void BM_DetBerkowitzWitt(benchmark::State& state) {
  const auto a = random_square(make_witt_ring(3, 2, 20), static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(det_berkowitz(a));
}
BENCHMARK(BM_DetBerkowitzWitt)->RangeMultiplier(2)->Range(4, 32);

void BM_DetBareissF9(benchmark::State& state) {
  const auto a = random_square(FiniteField(3, 2), static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(a));
}
BENCHMARK(BM_DetBareissF9)->RangeMultiplier(2)->Range(4, 32);

void BM_RankZ27(benchmark::State& state) {
  const auto a = random_square(ModulusRing(3, 3), static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_RankZ27)->RangeMultiplier(2)->Range(4, 32);

void BM_WedgeSlopes(benchmark::State& state) {
  const int h = static_cast<int>(state.range(0));
  const auto desc = GroupDescriptor::lubin_tate(h);
  const auto w = make_witt_ring(3, 1, required_wedge_precision(desc, 2, 1));
  const auto c = wedge_isocrystal(make_standard(desc, w), 2);
  for (auto _ : state) benchmark::DoNotOptimize(slopes(c));
}
BENCHMARK(BM_WedgeSlopes)->DenseRange(3, 6);

void BM_WittMul(benchmark::State& state) {
  const auto w = make_witt_ring(5, static_cast<int>(state.range(0)), 16);
  std::mt19937_64 gen(6);
  auto x = w.random(gen);
  const auto y = w.random(gen);
  for (auto _ : state) {
    x = w.mul(x, y);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_WittMul)->DenseRange(1, 4);

void BM_WittFrobenius(benchmark::State& state) {
  const auto w = make_witt_ring(5, static_cast<int>(state.range(0)), 16);
  std::mt19937_64 gen(7);
  auto x = w.random(gen);
  for (auto _ : state) {
    x = w.frobenius(x);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_WittFrobenius)->DenseRange(1, 4);

}  // namespace
BENCHMARK_MAIN();
