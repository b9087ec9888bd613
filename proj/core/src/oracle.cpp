#include "obbm/oracle.hpp"

#include "obbm/errors.hpp"
#include "obbm/foc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>

namespace obbm {

namespace {

std::vector<double> to_doubles(const std::vector<Rational>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

// Objective value, or -inf outside the domain (refinement helper).
double objective_or_lowest(const std::vector<double>& a, const std::vector<double>& b,
                           const std::vector<double>& x, const std::vector<double>& y) {
  constexpr double kLowest = -std::numeric_limits<double>::infinity();
  double spent = 0.0, slack = 0.0, drift = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) return kLowest;
    spent += x[i] + y[i];
    slack += x[i] - a[i] * a[i] / (2.0 * x[i]) - b[i] * b[i] / (2.0 * y[i]);
    if (slack < 0) return kLowest;
    drift += y[i] + a[i] * a[i] / (2.0 * x[i]) + b[i] * b[i] / (2.0 * y[i]);
  }
  if (spent > 1.0) return kLowest;
  return (1.0 - spent) * (1.0 - drift);
}

struct GridSearch {
  const std::vector<double>& a;
  const std::vector<double>& b;
  double step = 0.0;
  std::uint64_t evaluations = 0;
  std::uint64_t cap = 0;
  bool aborted = false;
  bool found = false;
  double best_value = -std::numeric_limits<double>::infinity();
  std::vector<double> cur_x, cur_y, best_x, best_y;

  void run(std::size_t m, double slack, double spent) {
    if (aborted) return;
    const std::size_t ell = a.size();
    if (m == ell) {
      const double value = (1.0 - spent) * (slack + 1.0 - spent);
      if (!found || value > best_value) {
        found = true;
        best_value = value;
        best_x = cur_x;
        best_y = cur_y;
      }
      return;
    }
    const double am = a[m], bm = b[m];
    // Positive prefix slack needs x above the root of x^2 + slack*x - a^2/2.
    const double x_low = (-slack + std::sqrt(slack * slack + 2.0 * am * am)) / 2.0;
    auto kx = static_cast<std::int64_t>(std::floor(x_low / step - 0.5)) + 1;
    if (kx < 0) kx = 0;
    for (;; ++kx) {
      const double x = (static_cast<double>(kx) + 0.5) * step;
      if (!(x > x_low)) continue;
      if (spent + x + 0.5 * step > 1.0) break;  // no room for any y
      const double gain = x - am * am / (2.0 * x);
      const double y_min = bm * bm / (2.0 * (slack + gain));
      auto ky = static_cast<std::int64_t>(std::floor(y_min / step - 0.5 - 1e-12)) + 1;
      if (ky < 0) ky = 0;
      for (;; ++ky) {
        const double y = (static_cast<double>(ky) + 0.5) * step;
        if (spent + x + y > 1.0) break;
        if (++evaluations > cap) {
          aborted = true;
          return;
        }
        cur_x[m] = x;
        cur_y[m] = y;
        run(m + 1, slack + gain - bm * bm / (2.0 * y), spent + x + y);
        if (aborted) return;
      }
    }
  }
};

}  // namespace

double objective(const ObstacleLandscape& L, const TimeAllocation& alloc) {
  const std::size_t ell = L.size();
  if (alloc.x.size() != ell || alloc.y.size() != ell)
    throw MismatchedLength("allocation length differs from landscape");
  const std::vector<double> a = to_doubles(L.a), b = to_doubles(L.b);
  double spent = 0.0, slack = 0.0, drift = 0.0;
  for (std::size_t i = 0; i < ell; ++i) {
    if (!(alloc.x[i] > 0) || !(alloc.y[i] > 0)) throw DomainViolation("3.6");
    spent += alloc.x[i] + alloc.y[i];
    slack += alloc.x[i] - a[i] * a[i] / (2.0 * alloc.x[i]) -
             b[i] * b[i] / (2.0 * alloc.y[i]);
    if (slack < 0) throw DomainViolation("3.4");
    drift += alloc.y[i] + a[i] * a[i] / (2.0 * alloc.x[i]) +
             b[i] * b[i] / (2.0 * alloc.y[i]);
  }
  if (spent > 1.0) throw DomainViolation("3.5");
  return (1.0 - spent) * (1.0 - drift);
}

OracleResult brute_force_max_D(const ObstacleLandscape& L, double resolution) {
  const std::size_t ell = L.size();
  if (ell == 0 || ell > 3) throw std::invalid_argument("oracle supports 1 <= ell <= 3");
  if (!(resolution > 0)) throw std::invalid_argument("resolution must be positive");
  const std::vector<double> a = to_doubles(L.a), b = to_doubles(L.b);

  // Exhaustive pruned enumeration; if the feasible lattice is too large,
  // coarsen the initial grid (refinement below recovers the accuracy).
  constexpr std::uint64_t kEvalCap = 30'000'000;
  double step = resolution;
  GridSearch gs{a, b};
  std::uint64_t total_evals = 0;
  for (;;) {
    gs.step = step;
    gs.evaluations = 0;
    gs.cap = kEvalCap;
    gs.aborted = false;
    gs.found = false;
    gs.best_value = -std::numeric_limits<double>::infinity();
    gs.cur_x.assign(ell, 0.0);
    gs.cur_y.assign(ell, 0.0);
    gs.run(0, 0.0, 0.0);
    total_evals += gs.evaluations;
    if (!gs.aborted) break;
    step *= 2.0;
  }
  if (!gs.found) throw NoFeasiblePoint();

  OracleResult res;
  res.grid = step;
  res.best.x = gs.best_x;
  res.best.y = gs.best_y;
  res.value = gs.best_value;

  // Coordinate descent, shrinking step /4 per round.
  std::vector<double*> coords;
  for (auto& v : res.best.x) coords.push_back(&v);
  for (auto& v : res.best.y) coords.push_back(&v);
  for (double st = step / 2.0; st > resolution / 4096.0; st /= 4.0) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (double* c : coords) {
        for (double dir : {+1.0, -1.0}) {
          for (;;) {
            *c += dir * st;
            ++total_evals;
            const double v = objective_or_lowest(a, b, res.best.x, res.best.y);
            if (v > res.value) {
              res.value = v;
              improved = true;
            } else {
              *c -= dir * st;
              break;
            }
          }
        }
      }
    }
  }
  res.evaluations = total_evals;
  return res;
}

OracleResult brute_force_min_time_Dhat(const ObstacleLandscape& L, double resolution) {
  const std::size_t ell = L.size();
  if (ell == 0 || ell > 4) throw std::invalid_argument("oracle supports 1 <= ell <= 4");
  if (!(resolution > 0)) throw std::invalid_argument("resolution must be positive");
  const std::vector<double> a = to_doubles(L.a), b = to_doubles(L.b);
  constexpr double kTimeCap = 16.0;

  std::uint64_t evals = 0;
  auto chain_time = [&](const std::vector<double>& c,
                        TimeAllocation* out) -> std::optional<double> {
    ++evals;
    double total = 0.0;
    TimeAllocation alloc;
    for (std::size_t m = 0; m < ell; ++m) {
      const double c_prev = m == 0 ? 0.0 : c[m - 1];
      const double c_next = m + 1 == ell ? 0.0 : c[m];
      try {
        const StepSolution s = solve_step(a[m], b[m], c_prev, c_next, kTimeCap);
        total += s.x + s.y;
        alloc.x.push_back(s.x);
        alloc.y.push_back(s.y);
      } catch (const InfeasibleStep&) {
        return std::nullopt;
      }
    }
    if (out) *out = std::move(alloc);
    return total;
  };

  OracleResult res;
  res.grid = resolution;
  bool found = false;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_c(ell - 1, 0.0);

  if (ell == 1) {
    const auto t = chain_time({}, &res.best);
    if (!t) throw NoFeasiblePoint();
    res.value = *t;
    res.evaluations = evals;
    return res;
  }

  constexpr double kCMax = 2.0;
  const auto npts = static_cast<std::size_t>(std::floor(kCMax / resolution)) + 1;
  std::vector<double> c(ell - 1, 0.0);
  // Odometer over the (ell-1)-dimensional grid {0, res, 2res, ...}.
  std::vector<std::size_t> idx(ell - 1, 0);
  for (;;) {
    for (std::size_t d = 0; d < c.size(); ++d) c[d] = static_cast<double>(idx[d]) * resolution;
    if (const auto t = chain_time(c, nullptr); t && *t < best) {
      best = *t;
      best_c = c;
      found = true;
    }
    std::size_t d = 0;
    while (d < idx.size() && ++idx[d] == npts) idx[d++] = 0;
    if (d == idx.size()) break;
  }
  if (!found) throw NoFeasiblePoint();

  // Coordinate descent on c, projected to c >= 0.
  for (double st = resolution / 2.0; st > resolution / 4096.0; st /= 4.0) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t d = 0; d < best_c.size(); ++d) {
        for (double dir : {+1.0, -1.0}) {
          for (;;) {
            const double prev = best_c[d];
            best_c[d] = std::max(0.0, best_c[d] + dir * st);
            const auto t = chain_time(best_c, nullptr);
            if (t && *t < best) {
              best = *t;
              improved = true;
              if (best_c[d] == prev) break;  // clipped at zero, no motion
            } else {
              best_c[d] = prev;
              break;
            }
          }
        }
      }
    }
  }
  const auto t = chain_time(best_c, &res.best);
  res.value = t ? *t : best;
  res.exponents = best_c;
  res.evaluations = evals;
  return res;
}

double heuristic_exponent(const ObstacleLandscape& L, const TimeAllocation& alloc,
                          double h) {
  const std::vector<double> a = to_doubles(L.a), b = to_doubles(L.b);
  double spent = 0.0, slack = 0.0;
  for (std::size_t i = 0; i < L.size(); ++i) {
    spent += alloc.x[i] + alloc.y[i];
    slack += alloc.x[i] - a[i] * a[i] / (2.0 * alloc.x[i]) -
             b[i] * b[i] / (2.0 * alloc.y[i]);
  }
  const double rest = 1.0 - spent;
  return slack + rest - h * h / (2.0 * rest);
}

}  // namespace obbm
