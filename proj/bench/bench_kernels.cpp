// Serial reference vs OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include "lrw/classical.hpp"
#include "lrw/fermionic.hpp"
#include "lrw/parallel.hpp"

using namespace lrw;

namespace {

Expansion sum_of_all(int n) {
  Expansion e;
  for (const auto& p : partitions_of(n)) e.add(p, 1);
  return e;
}

template <bool Parallel>
void BM_mult(benchmark::State& state) {
  const auto a = sum_of_all(static_cast<int>(state.range(0)));
  const auto b = sum_of_all(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Parallel ? mult(a, b) : mult_serial(a, b));
  state.counters["threads"] = detail::worker_count();
}

template <bool Parallel>
void BM_w_decomp(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Partition lambda{k + 2, k + 1, k, 1};
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? w_decomp(lambda, Family::o) : w_decomp_serial(lambda, Family::o));
  state.counters["threads"] = detail::worker_count();
}

template <bool Parallel>
void BM_fermionic(benchmark::State& state) {
  const LieSpec spec(LieType::B, 5);
  const FactorList factors({{static_cast<int>(state.range(0)), 3}});
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? fermionic_decomp(spec, factors) : fermionic_decomp_serial(spec, factors));
  state.counters["threads"] = detail::worker_count();
}

}  // namespace

BENCHMARK(BM_mult<false>)->Name("mult/serial")->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mult<true>)->Name("mult/parallel")->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_w_decomp<false>)->Name("w_decomp/serial")->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_w_decomp<true>)->Name("w_decomp/parallel")->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fermionic<false>)->Name("fermionic/serial")->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fermionic<true>)->Name("fermionic/parallel")->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
