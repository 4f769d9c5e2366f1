#include <benchmark/benchmark.h>

#include <random>

#include "qbool/gf2.hpp"
#include "qbool/groups.hpp"
#include "qbool/kernels.hpp"

using namespace qbool;

namespace {

const GroupPtr& d16() {
  static const GroupPtr g = groups::dihedral(8);
  return g;
}

BitVector random_cochain(std::size_t degree) {
  std::mt19937_64 rng(7);
  return gf2::random_vector(kernels::cochain_dim(d16()->order(), degree), rng);
}

void BM_columns_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::coboundary_columns(*d16(), static_cast<std::size_t>(st.range(0))));
}
void BM_columns_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::coboundary_columns_serial(*d16(), static_cast<std::size_t>(st.range(0))));
}

void BM_apply_parallel(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const BitVector f = random_cochain(n);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::apply_coboundary(*d16(), n, f));
}
void BM_apply_serial(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const BitVector f = random_cochain(n);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::apply_coboundary_serial(*d16(), n, f));
}

void BM_cup_parallel(benchmark::State& st) {
  const BitVector c = random_cochain(2), d = random_cochain(1);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::cup(d16()->order(), 2, 1, c, d));
}
void BM_cup_serial(benchmark::State& st) {
  const BitVector c = random_cochain(2), d = random_cochain(1);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::cup_serial(d16()->order(), 2, 1, c, d));
}

void BM_pullback_parallel(benchmark::State& st) {
  const auto inc = groups::subgroup_as_group(d16(), groups::generated(*d16(), {1, 8})).second;
  const BitVector f = random_cochain(3);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::pullback(inc, 3, f));
}
void BM_pullback_serial(benchmark::State& st) {
  const auto inc = groups::subgroup_as_group(d16(), groups::generated(*d16(), {1, 8})).second;
  const BitVector f = random_cochain(3);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::pullback_serial(inc, 3, f));
}

}  // namespace

BENCHMARK(BM_columns_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_columns_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apply_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apply_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cup_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cup_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pullback_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pullback_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
