#pragma once

#include "obbm/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace obbm {

// Obstacle landscape (a_i, b_i)_{i=1..ell}: per unit horizon, a_i is the
// width of the i-th branching area and b_i the width of the i-th obstacle.
// ell = 0 is the homogeneous baseline.
struct ObstacleLandscape {
  std::vector<Rational> a;
  std::vector<Rational> b;

  std::size_t size() const { return a.size(); }
  bool empty() const { return a.empty(); }
};

// Validates strict positivity; throws NonPositiveWidth(index, which) with a
// 1-based index. Order preserved.
ObstacleLandscape validate_landscape(
    const std::vector<std::pair<Rational, Rational>>& raw);

// The scaled geometry at horizon t: obstacle intervals are the components of
// K = U_m ( sum_{i<m}(a_i+b_i)t + a_m t , sum_{i<=m}(a_i+b_i)t ).
struct RegionGeometry {
  double horizon = 0.0;
  std::vector<std::pair<double, double>> obstacle_intervals;  // open intervals
  std::vector<double> cumulative_tops;  // sum_{i<=m}(a_i+b_i) * t
};

RegionGeometry geometry(const ObstacleLandscape& L, double t);

// Indicator of the complement of K: 0 strictly inside an obstacle interval,
// 1 otherwise (endpoints included in the rate-1 region).
int branching_rate(const RegionGeometry& G, double x);

}  // namespace obbm
