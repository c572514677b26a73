// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "regpow/betti.hpp"
#include "regpow/integral_closure.hpp"
#include "regpow/stanley_reisner.hpp"

using namespace regpow;

namespace {

const MonomialIdeal& cube_of_points() {
  static const MonomialIdeal I = power(coordinate_arrangement_ideal(3, 2), 4);
  return I;
}

void BM_BettiSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::betti_table(cube_of_points()));
}
void BM_BettiParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(cube_of_points()));
}

void BM_SymbolicSerial(benchmark::State& state) {
  const auto I = coordinate_arrangement_ideal(5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(serial::symbolic_power(I, static_cast<unsigned>(state.range(0))));
}
void BM_SymbolicParallel(benchmark::State& state) {
  const auto I = coordinate_arrangement_ideal(5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_power(I, static_cast<unsigned>(state.range(0))));
}

void BM_ClosureSerial(benchmark::State& state) {
  const auto I = MonomialIdeal(3, {Monomial{3, 0, 0}, Monomial{0, 4, 0}, Monomial{1, 1, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(serial::integral_closure_power(I, 2));
}
void BM_ClosureParallel(benchmark::State& state) {
  const auto I = MonomialIdeal(3, {Monomial{3, 0, 0}, Monomial{0, 4, 0}, Monomial{1, 1, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(integral_closure_power(I, 2));
}

void BM_ContainmentSerial(benchmark::State& state) {
  const auto I = coordinate_arrangement_ideal(5, 4);
  const auto S = symbolic_power(I, 12);
  const auto P = power(I, 3);
  for (auto _ : state) benchmark::DoNotOptimize(serial::is_subset(S, P));
}
void BM_ContainmentParallel(benchmark::State& state) {
  const auto I = coordinate_arrangement_ideal(5, 4);
  const auto S = symbolic_power(I, 12);
  const auto P = power(I, 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_subset(S, P));
}

}  // namespace

BENCHMARK(BM_BettiSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BettiParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymbolicSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymbolicParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ContainmentSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ContainmentParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
