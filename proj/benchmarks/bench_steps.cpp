#include <benchmark/benchmark.h>

#include "randprox/admm.hpp"
#include "randprox/experiment.hpp"
#include "randprox/resolvent.hpp"

using namespace randprox;

namespace {

struct Fixture {
  Graph graph{{1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 3}}};
  ComponentCover cover{edge_cover(graph)};
  CostList costs;

  Fixture() {
    for (int v = 1; v <= 5; ++v) {
      costs.push_back(std::make_shared<QuadraticCost>(1.0, Point{static_cast<double>(v)}));
    }
  }
};

void BM_ProxQuadratic(benchmark::State& state) {
  const QuadraticCost f(1.0, {2.0});
  const Point u{0.5};
  Point out(1);
  for (auto _ : state) {
    f.prox(2.0, u, out);
    benchmark::DoNotOptimize(out[0]);
  }
}
BENCHMARK(BM_ProxQuadratic);

void BM_SyncStep(benchmark::State& state) {
  const Fixture fx;
  AdmmState admm = zero_admm_state(fx.cover, 1);
  for (auto _ : state) {
    admm = sync_admm_step(std::move(admm), 1.0, fx.cover, fx.costs);
  }
  benchmark::DoNotOptimize(admm.x[0]);
}
BENCHMARK(BM_SyncStep);

void BM_AsyncStep(benchmark::State& state) {
  const Fixture fx;
  AdmmState admm = zero_admm_state(fx.cover, 1);
  int l = 0;
  for (auto _ : state) {
    admm = async_admm_step(std::move(admm), l, 1.0, fx.cover, fx.costs);
    l = (l + 1) % 5;
  }
  benchmark::DoNotOptimize(admm.x[0]);
}
BENCHMARK(BM_AsyncStep);

void BM_ResolventApply(benchmark::State& state) {
  const Fixture fx;
  const DouglasRachfordResolvent S(fx.cover, fx.costs, 1.0, 1);
  BlockVector zeta(fx.cover, 1);
  for (auto _ : state) {
    zeta = S.apply(zeta);
  }
  benchmark::DoNotOptimize(zeta.block(0)[0]);
}
BENCHMARK(BM_ResolventApply);

void BM_RunExperiment(benchmark::State& state) {
  ExperimentConfig cfg = ExperimentConfig::g5_defaults();
  cfg.budget = state.range(0);
  cfg.record_every = cfg.budget;
  for (auto _ : state) {
    const auto records = run_experiment(cfg);
    benchmark::DoNotOptimize(records.back().squared_error);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunExperiment)->Arg(1000)->Arg(5000);

}  // namespace

BENCHMARK_MAIN();
