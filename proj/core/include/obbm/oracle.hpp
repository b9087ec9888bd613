#pragma once

#include "obbm/landscape.hpp"

#include <cstdint>
#include <vector>

namespace obbm {

struct TimeAllocation {
  std::vector<double> x;
  std::vector<double> y;
};

// The product (1 - sum(x+y)) * (1 - sum(y + a^2/(2x) + b^2/(2y))), defined on
// the constrained domain: positivity, prefix conditions
// sum_{i<=m}(x_i - a_i^2/(2x_i) - b_i^2/(2y_i)) >= 0, and budget sum <= 1.
// Throws DomainViolation naming the first failing constraint.
double objective(const ObstacleLandscape& L, const TimeAllocation& alloc);

struct OracleResult {
  TimeAllocation best;
  double value = 0.0;              // objective (max) or total time (min)
  double grid = 0.0;               // resolution actually used
  std::uint64_t evaluations = 0;
  std::vector<double> exponents;   // optimizing c vector (min-time oracle only)
};

// Exhaustive interior-grid maximization of the objective over the full
// allocation domain, then coordinate-descent refinement. ell <= 3.
OracleResult brute_force_max_D(const ObstacleLandscape& L, double resolution);

// Grid over intermediate exponents (c_1..c_{ell-1}) >= 0, chaining the
// per-obstacle closed-step solver, minimizing total time; coordinate-descent
// refinement on c. ell <= 4.
OracleResult brute_force_min_time_Dhat(const ObstacleLandscape& L, double resolution);

// The heuristic exponent J at allocation and target slope h:
// sum(x - a^2/2x - b^2/2y) + (1 - sum(x+y)) - h^2/(2(1 - sum(x+y))).
double heuristic_exponent(const ObstacleLandscape& L, const TimeAllocation& alloc,
                          double h);

}  // namespace obbm
