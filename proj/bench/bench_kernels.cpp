#include <benchmark/benchmark.h>

#include "grossone/bounds.hpp"
#include "grossone/kernels.hpp"

namespace k = grossone::kernels;

template <auto Fn>
void subsets(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Fn(static_cast<unsigned>(state.range(0))));
}

template <auto Fn>
void q1_numerals(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Fn(state.range(0)));
}

template <auto Fn>
void coefficient_tuples(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Fn(state.range(0), static_cast<unsigned>(state.range(1))));
}

template <auto Fn>
void digit_grid(benchmark::State& state) {
  const k::Interval unit{0, 1, true, false};
  for (auto _ : state) benchmark::DoNotOptimize(Fn(10, static_cast<unsigned>(state.range(0)), unit));
}

template <k::Backend B>
void upper_sweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(grossone::upper_sweep(state.range(0), B));
}

BENCHMARK(subsets<k::serial::count_subsets>)->Name("subsets/serial")->Arg(20);
BENCHMARK(subsets<k::parallel::count_subsets>)->Name("subsets/parallel")->Arg(20)->UseRealTime();
BENCHMARK(q1_numerals<k::serial::count_q1_numerals>)->Name("q1_numerals/serial")->Arg(2000);
BENCHMARK(q1_numerals<k::parallel::count_q1_numerals>)->Name("q1_numerals/parallel")->Arg(2000)->UseRealTime();
BENCHMARK(coefficient_tuples<k::serial::count_coefficient_tuples>)->Name("coefficient_tuples/serial")->Args({4, 5});
BENCHMARK(coefficient_tuples<k::parallel::count_coefficient_tuples>)
    ->Name("coefficient_tuples/parallel")
    ->Args({4, 5})
    ->UseRealTime();
BENCHMARK(digit_grid<k::serial::count_digit_grid>)->Name("digit_grid/serial")->Arg(6);
BENCHMARK(digit_grid<k::parallel::count_digit_grid>)->Name("digit_grid/parallel")->Arg(6)->UseRealTime();
BENCHMARK(upper_sweep<k::Backend::Serial>)->Name("upper_sweep/serial")->Arg(50);
BENCHMARK(upper_sweep<k::Backend::Parallel>)->Name("upper_sweep/parallel")->Arg(50)->UseRealTime();

BENCHMARK_MAIN();
