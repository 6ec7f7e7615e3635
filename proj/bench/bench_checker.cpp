// Serial reference versus OpenMP trial runner on the same workloads.

#include <benchmark/benchmark.h>

#include <optional>

#include "support/random_spec.hpp"
#include "transfun/checker.hpp"

using namespace transfun;

namespace {

// Largest of 200 random trees with exactly the requested depth.
Transfunction workload(std::int64_t depth) {
  transfun::testing::RandomSpecGenerator gen(7, 5);
  const auto d = static_cast<std::size_t>(depth);
  std::optional<Transfunction> best;
  for (int i = 0; i < 200; ++i) {
    Transfunction t = gen.tree(d);
    if (transfun::depth(t) == d && (!best || node_count(t) > node_count(*best))) best = t;
  }
  return best ? *best : gen.tree(d);
}

CheckConfig bench_config() {
  CheckConfig cfg;
  cfg.trials = 1000;
  cfg.seed = 1;
  return cfg;
}

void check_all_with(benchmark::State& state, Execution ex) {
  const Transfunction spec = workload(state.range(0));
  const CheckConfig cfg = bench_config();
  for (auto _ : state) benchmark::DoNotOptimize(check_all(spec, cfg, ex));
  state.counters["nodes"] = static_cast<double>(node_count(spec));
}

void BM_CheckAllSerial(benchmark::State& state) { check_all_with(state, Execution::serial); }
void BM_CheckAllParallel(benchmark::State& state) { check_all_with(state, Execution::parallel); }

void continuity_with(benchmark::State& state, Execution ex) {
  const Transfunction spec = workload(state.range(0));
  const CheckConfig cfg = bench_config();
  for (auto _ : state) benchmark::DoNotOptimize(check_axiom(spec, Axiom::continuous, cfg, ex));
  state.counters["nodes"] = static_cast<double>(node_count(spec));
}

void BM_ContinuitySerial(benchmark::State& state) { continuity_with(state, Execution::serial); }
void BM_ContinuityParallel(benchmark::State& state) { continuity_with(state, Execution::parallel); }

}  // namespace

BENCHMARK(BM_CheckAllSerial)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckAllParallel)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ContinuitySerial)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ContinuityParallel)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
