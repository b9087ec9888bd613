#include <benchmark/benchmark.h>

#include "obbm/blocks.hpp"
#include "obbm/errors.hpp"
#include "obbm/foc.hpp"
#include "obbm/oracle.hpp"
#include "obbm/plan.hpp"
#include "obbm/sim.hpp"

#include <random>

using namespace obbm;

namespace {

ObstacleLandscape make_landscape(std::size_t ell, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(1, 32);
  ObstacleLandscape L;
  for (std::size_t i = 0; i < ell; ++i) {
    L.a.emplace_back(d(rng), 64);
    L.b.emplace_back(d(rng), 64);
  }
  return L;
}

void BM_SolveStep(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> w(0.05, 2.0), c(0.0, 1.0);
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(solve_step(w(rng), w(rng), c(rng), c(rng)));
    } catch (const InfeasibleStep&) {
    }
  }
}
BENCHMARK(BM_SolveStep);

void BM_OptimalBlocks(benchmark::State& state) {
  const auto L = make_landscape(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_blocks(L));
}
BENCHMARK(BM_OptimalBlocks)->Arg(2)->Arg(8)->Arg(32);

void BM_CrossingPlan(benchmark::State& state) {
  auto L = make_landscape(static_cast<std::size_t>(state.range(0)), 3);
  // Rescale so the plan exists with room to spare.
  const Rational lambda = rational_from_double(0.5 / feasibility(L).total_time);
  for (auto& v : L.a) v *= lambda;
  for (auto& v : L.b) v *= lambda;
  for (auto _ : state) benchmark::DoNotOptimize(crossing_plan(L));
}
BENCHMARK(BM_CrossingPlan)->Arg(1)->Arg(4)->Arg(16);

void BM_OracleMaxD(benchmark::State& state) {
  const auto L = validate_landscape({{Rational(3, 10), Rational(1, 5)}});
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_max_D(L, 5e-2));
}
BENCHMARK(BM_OracleMaxD)->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
  SimConfig cfg;
  cfg.landscape = validate_landscape({{Rational(3, 10), Rational(1, 5)}});
  cfg.horizon = static_cast<double>(state.range(0));
  cfg.particle_cap = 10'000;
  cfg.seed = 7;
  for (auto _ : state) benchmark::DoNotOptimize(simulate(cfg));
}
BENCHMARK(BM_Simulate)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
