#include <benchmark/benchmark.h>

#include "pbr/feasibility.hpp"
#include "pbr/sampling.hpp"
#include "pbr/scenarios.hpp"
#include "pbr/setups.hpp"

static void BM_ZeroOutcomeTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pbr::zero_outcome_table());
}
BENCHMARK(BM_ZeroOutcomeTable);

static void BM_BornMachZehnder(benchmark::State& state) {
  const auto basis = pbr::xi_basis();
  const auto psi = pbr::mz_joint_state();
  for (auto _ : state) benchmark::DoNotOptimize(pbr::born_distribution(psi, basis));
}
BENCHMARK(BM_BornMachZehnder);

// Overlapping PBR instance: phase one plus the deletion filter.
static void BM_FeasibilityPbrOverlap(benchmark::State& state) {
  const auto [mu0, mu1] = pbr::overlap_pair(static_cast<std::size_t>(state.range(0)), 0.3);
  const auto problem = pbr::pbr_problem(mu0, mu1);
  for (auto _ : state) benchmark::DoNotOptimize(pbr::feasibility(problem));
}
BENCHMARK(BM_FeasibilityPbrOverlap)->DenseRange(2, 8, 2);

static void BM_FeasibilityPbrDisjoint(benchmark::State& state) {
  const auto [mu0, mu1] = pbr::overlap_pair(static_cast<std::size_t>(state.range(0)), 0.0);
  const auto problem = pbr::pbr_problem(mu0, mu1);
  for (auto _ : state) benchmark::DoNotOptimize(pbr::feasibility(problem));
}
BENCHMARK(BM_FeasibilityPbrDisjoint)->DenseRange(2, 8, 2);

static void BM_MonteCarlo(benchmark::State& state) {
  const auto [mu0, mu1] = pbr::overlap_pair(4, 0.3);
  const auto model = pbr::mz_constant_model(mu0, mu1);
  const auto lanes = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pbr::monte_carlo(model, 100000, 1, lanes));
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_MonteCarlo)->Arg(1)->Arg(4)->UseRealTime();

BENCHMARK_MAIN();
