#pragma once

#include "obbm/landscape.hpp"
#include "obbm/plan.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace obbm {

struct SimConfig {
  ObstacleLandscape landscape;
  double horizon = 8.0;
  double dt = 1e-3;
  std::uint64_t particle_cap = 100'000;
  std::uint64_t seed = 0;
  // Level probes (x, a): count particles at position >= a*horizon when the
  // simulation clock reaches x*horizon.
  std::vector<std::pair<double, double>> record_levels;
};

struct SimResult {
  std::vector<std::pair<double, double>> max_trajectory;  // (time, current max)
  double final_max = 0.0;
  std::vector<std::pair<double, std::uint64_t>> population;  // (time, alive count)
  std::vector<std::uint64_t> level_counts;  // aligned with record_levels
  std::uint64_t final_above_top = 0;  // particles above the last obstacle top at the horizon
  std::uint64_t pruned_mass = 0;
  std::uint64_t seed = 0;
};

// Euler scheme: per step each particle gains a N(0, dt) increment, then
// branches with probability rate(step-start position) * dt; above the cap the
// lowest particles are discarded first (the leader always survives).
// Deterministic given the config.
SimResult simulate(const SimConfig& cfg);

// Level-set probe for the homogeneous baseline; requires ell = 0 and the
// supercritical slope a < sqrt(2) * x. Returns the single-run count.
std::uint64_t estimate_level_set(const SimConfig& cfg, double x, double a);

struct Aggregate {
  double mean_final_max = 0.0;
  double se_final_max = 0.0;
  std::vector<std::pair<double, double>> level_stats;  // (mean, se) per probe
  std::vector<SimResult> replicas;
};

// Replica r runs with seed cfg.seed + r; OBSTACLE_BBM_THREADS caps the
// fan-out (0 or unset = hardware concurrency). Aggregation is replica-ordered
// and independent of execution order.
Aggregate replicate(const SimConfig& cfg, std::size_t n);

struct TraceWindow {
  double time = 0.0;   // checkpoint time
  double lo = 0.0;     // window bottom (space)
  double hi = 0.0;     // window top (space)
  std::uint64_t count = 0;
};

struct StrategyTrace {
  std::vector<TraceWindow> windows;   // per obstacle: end-of-crossing window
  std::uint64_t above_final_top = 0;  // particles above the last top at the horizon
  double final_max = 0.0;
};

// Counts particles inside the per-obstacle strategy windows at the plan's
// checkpoint times. Degenerates to max tracking for ell = 0.
StrategyTrace strategy_trace(const SimConfig& cfg, const CrossingPlan& plan);

}  // namespace obbm
