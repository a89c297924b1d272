#include <benchmark/benchmark.h>

#include "cognet/access.hpp"
#include "cognet/coverage_primary.hpp"
#include "cognet/coverage_secondary.hpp"
#include "cognet/montecarlo.hpp"
#include "cognet/scenario.hpp"

namespace {

using namespace cognet;

Scenario ula(int m) {
  Scenario sc = default_scenario();
  set_ula_patterns(sc, m, m);
  return sc;
}

void BM_ActivityFactorSectorized(benchmark::State& state) {
  const Scenario sc = ula(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(activity_factor_sectorized(sc));
}
BENCHMARK(BM_ActivityFactorSectorized)->Arg(1)->Arg(4)->Arg(8);

void BM_ActivityFactorGeneral(benchmark::State& state) {
  const Scenario sc = ula(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(activity_factor(sc));
}
BENCHMARK(BM_ActivityFactorGeneral)->Arg(1)->Arg(4)->Arg(8);

void BM_CoveragePrimarySimplified(benchmark::State& state) {
  const Scenario sc = ula(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coverage_primary_simplified(1.0, sc));
}
BENCHMARK(BM_CoveragePrimarySimplified)->Arg(1)->Arg(4)->Arg(8);

void BM_CoveragePrimaryExact(benchmark::State& state) {
  const Scenario sc = ula(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coverage_primary_exact(1.0, sc));
}
BENCHMARK(BM_CoveragePrimaryExact)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Term4Exact(benchmark::State& state) {
  const Scenario sc = ula(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(term4_exact(1.0, sc));
}
BENCHMARK(BM_Term4Exact)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ProfileBuild(benchmark::State& state) {
  const Scenario sc = ula(static_cast<int>(state.range(0)));
  const PlacementPose pose = sc.placement.pose();
  for (auto _ : state) {
    SecondaryCoverageProfile profile(1.0, sc, pose);
    benchmark::DoNotOptimize(profile.term_count());
  }
}
BENCHMARK(BM_ProfileBuild)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ProfileEvaluate(benchmark::State& state) {
  const Scenario sc = ula(4);
  const SecondaryCoverageProfile profile(1.0, sc, sc.placement.pose());
  double rho = 1e-12;
  for (auto _ : state) {
    benchmark::DoNotOptimize(profile.evaluate(rho));
    rho = rho < 1e-4 ? rho * 1.1 : 1e-12;
  }
}
BENCHMARK(BM_ProfileEvaluate);

void BM_MonteCarloCoveragePrimary(benchmark::State& state) {
  Scenario sc = ula(4);
  sc.region_radius = 1000.0;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_coverage_primary(1.0, sc, 1000, 7));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_MonteCarloCoveragePrimary)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
