#include <benchmark/benchmark.h>

#include <vector>

#include "locdom/enumerate.hpp"
#include "locdom/verify.hpp"

using namespace locdom;

namespace {

const std::vector<Graph>& connected(std::size_t n) {
  static std::vector<std::vector<Graph>> cache(kMaxEnumerationOrder + 1);
  auto& graphs = cache[n];
  if (graphs.empty()) {
    GraphStream stream({n, true, false, {}});
    while (auto g = stream.next()) graphs.push_back(std::move(*g));
  }
  return graphs;
}

void BM_Serial(benchmark::State& state) {
  const auto& graphs = connected(static_cast<std::size_t>(state.range(0)));
  const auto theorem = static_cast<Theorem>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_batch_serial(graphs, theorem));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
  state.SetLabel(std::string(to_string(theorem)));
}

void BM_Parallel(benchmark::State& state) {
  const auto& graphs = connected(static_cast<std::size_t>(state.range(0)));
  const auto theorem = static_cast<Theorem>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_batch_parallel(graphs, theorem));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
  state.SetLabel(std::string(to_string(theorem)));
}

void Args(benchmark::internal::Benchmark* b) {
  for (auto t : {Theorem::weld_half, Theorem::eltd_two_thirds, Theorem::ore_half})
    b->Args({5, static_cast<std::int64_t>(t)});
  b->Args({6, static_cast<std::int64_t>(Theorem::weld_half)});
  b->Args({6, static_cast<std::int64_t>(Theorem::ore_half)});
  b->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_Serial)->Apply(Args);
BENCHMARK(BM_Parallel)->Apply(Args);

BENCHMARK_MAIN();
