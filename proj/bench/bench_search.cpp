// Serial reference vs OpenMP paths of the enumeration kernels.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "hemi/search.hpp"

namespace {

void BM_Lattices(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  std::size_t count = 0;
  for (auto _ : state) {
    auto s = hemi::enumerate_lattices(n, {.jobs = jobs});
    count = 0;
    while (s.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.counters["lattices"] = static_cast<double>(count);
}

void BM_DistributiveLattices(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto v = hemi::enumerate_lattices(n, {.distributive = true, .jobs = jobs}).collect();
    benchmark::DoNotOptimize(v.data());
  }
}

void BM_CounterexampleSearch(benchmark::State& state) {
  hemi::EnumerationSpec spec;
  spec.target = hemi::VarietyLabel::SH;
  spec.max_size = static_cast<std::size_t>(state.range(0));
  spec.predicate = "kalman-battery";
  spec.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto out = hemi::find_counterexample(spec);
    benchmark::DoNotOptimize(out.examined);
    state.counters["instances"] = static_cast<double>(out.examined);
  }
}

void jobs_args(benchmark::internal::Benchmark* b, std::initializer_list<int> sizes) {
  const int hw = std::max(2, omp_get_max_threads());
  for (int n : sizes) {
    b->Args({n, 1});
    b->Args({n, hw});
  }
}

}  // namespace

BENCHMARK(BM_Lattices)->Apply([](auto* b) { jobs_args(b, {8, 9}); })->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistributiveLattices)->Apply([](auto* b) { jobs_args(b, {9}); })->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CounterexampleSearch)->Apply([](auto* b) { jobs_args(b, {4, 5}); })->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
