#include "obbm/landscape.hpp"

#include "obbm/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace obbm {

ObstacleLandscape validate_landscape(
    const std::vector<std::pair<Rational, Rational>>& raw) {
  ObstacleLandscape L;
  L.a.reserve(raw.size());
  L.b.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].first <= 0) throw NonPositiveWidth(i + 1, 'a');
    if (raw[i].second <= 0) throw NonPositiveWidth(i + 1, 'b');
    L.a.push_back(raw[i].first);
    L.b.push_back(raw[i].second);
  }
  return L;
}

RegionGeometry geometry(const ObstacleLandscape& L, double t) {
  if (!(t > 0)) throw std::invalid_argument("horizon must be positive");
  RegionGeometry G;
  G.horizon = t;
  G.obstacle_intervals.reserve(L.size());
  G.cumulative_tops.reserve(L.size());
  Rational cum = 0;
  for (std::size_t m = 0; m < L.size(); ++m) {
    const double lo = to_double(cum + L.a[m]) * t;
    cum += L.a[m] + L.b[m];
    const double hi = to_double(cum) * t;
    G.obstacle_intervals.emplace_back(lo, hi);
    G.cumulative_tops.push_back(hi);
  }
  return G;
}

int branching_rate(const RegionGeometry& G, double x) {
  // First interval whose upper end is above x; only it can contain x.
  auto it = std::lower_bound(
      G.obstacle_intervals.begin(), G.obstacle_intervals.end(), x,
      [](const std::pair<double, double>& iv, double v) { return iv.second <= v; });
  if (it != G.obstacle_intervals.end() && it->first < x && x < it->second) return 0;
  return 1;
}

}  // namespace obbm
