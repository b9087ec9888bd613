#include "obbm/sim.hpp"

#include "obbm/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

namespace obbm {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Uniform in (0, 1).
inline double u01(std::uint64_t& s) {
  return (static_cast<double>(splitmix64(s) >> 11) + 0.5) * 0x1.0p-53;
}

inline double gauss(std::uint64_t& s) {
  const double u1 = u01(s);
  const double u2 = u01(s);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

// Each particle carries its own stream so that trajectories are independent
// of population bookkeeping (pruning, sibling order).
struct Particle {
  double pos;
  std::uint64_t rng;
};

struct Probe {
  double time = 0.0;
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  std::int64_t step = 0;
  std::uint64_t count = 0;
  bool done = false;
};

struct Engine {
  std::vector<Particle> particles;
  SimResult result;

  void run(const SimConfig& cfg, std::vector<Probe>& probes) {
    if (!(cfg.dt > 0) || !(cfg.horizon > 0) || cfg.particle_cap < 1)
      throw std::invalid_argument("invalid simulation config");
    const RegionGeometry G = geometry(cfg.landscape, cfg.horizon);
    const double top =
        G.cumulative_tops.empty() ? 0.0 : G.cumulative_tops.back();
    const auto n_steps =
        static_cast<std::int64_t>(std::ceil(cfg.horizon / cfg.dt - 1e-9));
    const std::int64_t sample_every = std::max<std::int64_t>(1, n_steps / 256);
    const double sqrt_dt = std::sqrt(cfg.dt);

    std::uint64_t s0 = cfg.seed;
    particles.clear();
    particles.push_back({0.0, splitmix64(s0)});
    result = SimResult{};
    result.seed = cfg.seed;

    for (auto& p : probes) {
      p.step = std::clamp<std::int64_t>(
          static_cast<std::int64_t>(std::llround(p.time / cfg.dt)), 0, n_steps);
      p.done = false;
      p.count = 0;
    }

    auto serve_probes = [&](std::int64_t step) {
      for (auto& p : probes) {
        if (p.done || p.step != step) continue;
        for (const auto& q : particles)
          if (q.pos >= p.lo && q.pos <= p.hi) ++p.count;
        p.done = true;
      }
    };
    auto sample = [&](std::int64_t step) {
      const double time = static_cast<double>(step) * cfg.dt;
      double mx = -std::numeric_limits<double>::infinity();
      for (const auto& q : particles) mx = std::max(mx, q.pos);
      result.max_trajectory.emplace_back(time, mx);
      result.population.emplace_back(time, particles.size());
    };

    serve_probes(0);
    sample(0);
    for (std::int64_t step = 1; step <= n_steps; ++step) {
      const std::size_t n0 = particles.size();
      for (std::size_t i = 0; i < n0; ++i) {
        Particle& p = particles[i];
        const double start = p.pos;
        p.pos += gauss(p.rng) * sqrt_dt;
        if (branching_rate(G, start) == 1 && u01(p.rng) < cfg.dt) {
          const std::uint64_t d = splitmix64(p.rng);
          particles.push_back({p.pos, d ^ 0x9E6C63D0876A9A35ull});
        }
      }
      if (particles.size() > cfg.particle_cap) {
        const auto keep = static_cast<std::ptrdiff_t>(cfg.particle_cap);
        std::nth_element(particles.begin(), particles.begin() + keep - 1,
                         particles.end(),
                         [](const Particle& l, const Particle& r) {
                           return l.pos > r.pos;
                         });
        result.pruned_mass += particles.size() - cfg.particle_cap;
        particles.resize(cfg.particle_cap);
      }
      serve_probes(step);
      if (step % sample_every == 0 || step == n_steps) sample(step);
    }

    double mx = -std::numeric_limits<double>::infinity();
    for (const auto& q : particles) {
      mx = std::max(mx, q.pos);
      if (q.pos > top) ++result.final_above_top;
    }
    result.final_max = mx;
  }
};

std::size_t thread_budget() {
  if (const char* env = std::getenv("OBSTACLE_BBM_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

}  // namespace

SimResult simulate(const SimConfig& cfg) {
  std::vector<Probe> probes;
  probes.reserve(cfg.record_levels.size());
  for (const auto& [x, a] : cfg.record_levels) {
    Probe p;
    p.time = x * cfg.horizon;
    p.lo = a * cfg.horizon;
    probes.push_back(p);
  }
  Engine eng;
  eng.run(cfg, probes);
  for (const auto& p : probes) eng.result.level_counts.push_back(p.count);
  return eng.result;
}

std::uint64_t estimate_level_set(const SimConfig& cfg, double x, double a) {
  if (!cfg.landscape.empty())
    throw ProbeOutOfRange("level-set probes require the homogeneous landscape");
  if (!(x > 0) || x > 1.0)
    throw ProbeOutOfRange("probe time fraction must lie in (0, 1]");
  if (!(a > 0) || !(a < std::numbers::sqrt2 * x))
    throw ProbeOutOfRange("slope must satisfy 0 < a < sqrt(2) * x");
  SimConfig local = cfg;
  local.record_levels = {{x, a}};
  return simulate(local).level_counts.at(0);
}

Aggregate replicate(const SimConfig& cfg, std::size_t n) {
  if (n < 2) throw std::invalid_argument("need at least 2 replicas");
  Aggregate agg;
  agg.replicas.resize(n);
  const std::size_t threads = std::min(thread_budget(), n);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t r = next.fetch_add(1);
      if (r >= n) return;
      SimConfig local = cfg;
      local.seed = cfg.seed + r;
      agg.replicas[r] = simulate(local);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  auto mean_se = [n](auto&& get) {
    double mean = 0.0;
    for (std::size_t r = 0; r < n; ++r) mean += get(r);
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double d = get(r) - mean;
      var += d * d;
    }
    var /= static_cast<double>(n - 1);
    return std::pair<double, double>(mean, std::sqrt(var / static_cast<double>(n)));
  };

  const auto [m, se] = mean_se([&](std::size_t r) { return agg.replicas[r].final_max; });
  agg.mean_final_max = m;
  agg.se_final_max = se;
  for (std::size_t k = 0; k < cfg.record_levels.size(); ++k)
    agg.level_stats.push_back(mean_se(
        [&](std::size_t r) { return static_cast<double>(agg.replicas[r].level_counts[k]); }));
  return agg;
}

StrategyTrace strategy_trace(const SimConfig& cfg, const CrossingPlan& plan) {
  const double t = cfg.horizon;
  std::vector<Probe> probes;
  const std::size_t ell = cfg.landscape.size();
  if (ell != 0 && (plan.x_star.size() != ell || plan.y_star.size() != ell))
    throw MismatchedLength("plan does not match landscape");
  constexpr double kDelta = 0.05;  // window slack per unit horizon
  constexpr double kWidth = 1.0;   // absolute window extension
  const RegionGeometry G = geometry(cfg.landscape, t);
  double clock = 0.0;
  for (std::size_t m = 0; m < ell; ++m) {
    // A-window: just before entering obstacle m, below its bottom edge.
    Probe pa;
    pa.time = (clock + plan.x_star[m]) * t;
    pa.lo = G.obstacle_intervals[m].first - kDelta * t - kWidth;
    pa.hi = G.obstacle_intervals[m].first;
    probes.push_back(pa);
    clock += plan.x_star[m] + plan.y_star[m];
    // B-window: end of crossing, above the obstacle top.
    Probe pb;
    pb.time = std::min(1.0, clock) * t;
    pb.lo = G.cumulative_tops[m];
    pb.hi = G.cumulative_tops[m] + kDelta * t + kWidth;
    probes.push_back(pb);
  }
  Engine eng;
  eng.run(cfg, probes);
  StrategyTrace trace;
  for (const auto& p : probes)
    trace.windows.push_back({p.time, p.lo, p.hi, p.count});
  trace.above_final_top = eng.result.final_above_top;
  trace.final_max = eng.result.final_max;
  return trace;
}

}  // namespace obbm
