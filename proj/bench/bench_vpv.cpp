#include <benchmark/benchmark.h>

#include "vpvxy/vpv.hpp"

using vpvxy::Convention;
using vpvxy::ProductForm;
using vpvxy::Rational;

namespace {

void BM_LogSumSerial(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto r = vpvxy::kernels::log_sum_serial(Rational(1, 2), Rational(3, 4), {n, n}, Convention::Axis,
                                            ProductForm::Direct, 256);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

void BM_LogSumParallel(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto r = vpvxy::kernels::log_sum_parallel(Rational(1, 2), Rational(3, 4), {n, n},
                                              Convention::Axis, ProductForm::Direct, 256);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

}  // namespace

BENCHMARK(BM_LogSumSerial)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LogSumParallel)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
