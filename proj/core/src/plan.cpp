#include "obbm/plan.hpp"

#include "obbm/errors.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace obbm {

double f_of_c_tilde(double c) {
  return std::sqrt((1.0 + c) / 2.0 + std::sqrt(c * c / 4.0 + c));
}

namespace {

Rational range_sum(const std::vector<Rational>& v, std::size_t lo, std::size_t hi) {
  // sum over 1-based inclusive (lo, hi]
  Rational s = 0;
  for (std::size_t i = lo; i < hi; ++i) s += v[i];
  return s;
}

double block_time(double A, double B) {
  const double c = (B * B) / (2.0 * A * A);
  const double f = f_of_c_tilde(c);
  return A * f + (B * B) / (2.0 * A * (f - 1.0 / (2.0 * f)));
}

double total_time_of(const ObstacleLandscape& L) {
  const BlockDivision d = optimal_blocks(L);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < d.cuts.size(); ++i) {
    const Rational A = range_sum(L.a, d.cuts[i], d.cuts[i + 1]);
    const Rational B = range_sum(L.b, d.cuts[i], d.cuts[i + 1]);
    total += block_time(to_double(A), to_double(B));
  }
  return total;
}

constexpr double kFeasibleSlack = 1e-12;

}  // namespace

BlockConstants block_constants(const ObstacleLandscape& L, const BlockDivision& d,
                               std::size_t block_index) {
  if (block_index + 1 >= d.cuts.size())
    throw IndexRange("block index out of range");
  const Rational A = range_sum(L.a, d.cuts[block_index], d.cuts[block_index + 1]);
  const Rational B = range_sum(L.b, d.cuts[block_index], d.cuts[block_index + 1]);
  BlockConstants bc;
  bc.c_tilde = to_double((B * B) / (2 * A * A));  // exact rational first
  bc.f_value = f_of_c_tilde(bc.c_tilde);
  bc.block_a = to_double(A);
  bc.block_b = to_double(B);
  return bc;
}

CrossingPlan crossing_plan(const ObstacleLandscape& L) {
  const std::size_t ell = L.size();
  if (ell == 0) throw EmptyLandscape();
  CrossingPlan plan;
  plan.division = optimal_blocks(L);
  plan.x_star.resize(ell);
  plan.y_star.resize(ell);
  plan.c_star.assign(ell > 0 ? ell - 1 : 0, 0.0);

  for (std::size_t i = 0; i + 1 < plan.division.cuts.size(); ++i) {
    const std::size_t u = plan.division.cuts[i], v = plan.division.cuts[i + 1];
    const BlockConstants bc = block_constants(L, plan.division, i);
    const double f = bc.f_value;
    const double g = f - 1.0 / (2.0 * f);
    for (std::size_t m = u; m < v; ++m) {
      plan.x_star[m] = to_double(L.a[m]) * f;
      plan.y_star[m] = to_double(L.b[m]) / (2.0 * (bc.block_a / bc.block_b) * g);
    }
    // Intermediate exponents, block-relative partial sums; zero at cuts.
    const Rational B = range_sum(L.b, u, v);
    for (std::size_t m = u + 1; m < v; ++m) {
      const Rational Pa = range_sum(L.a, u, m), Pb = range_sum(L.b, u, m);
      const Rational Sa = range_sum(L.a, m, v), Sb = range_sum(L.b, m, v);
      plan.c_star[m - 1] = to_double((Pa * Sb - Pb * Sa) / B) * g;
    }
  }
  double total = 0.0;
  for (std::size_t m = 0; m < ell; ++m) total += plan.x_star[m] + plan.y_star[m];
  plan.total_time = total;
  return plan;
}

Feasibility feasibility(const ObstacleLandscape& L) {
  if (L.empty()) throw EmptyLandscape();
  Feasibility fz;
  fz.total_time = total_time_of(L);
  fz.feasible = fz.total_time <= 1.0 + kFeasibleSlack;
  return fz;
}

FrontierEstimate frontier(const ObstacleLandscape& L) {
  constexpr double kSqrt2 = 1.4142135623730951;
  FrontierEstimate fe;
  if (L.empty()) {
    fe.feasible = true;
    fe.h_star = kSqrt2;
    fe.limit_over_t = kSqrt2;
    return fe;
  }
  const Feasibility fz = feasibility(L);
  double sum_ab = 0.0;
  for (std::size_t i = 0; i < L.size(); ++i) sum_ab += to_double(L.a[i] + L.b[i]);
  if (fz.feasible) {
    fe.feasible = true;
    fe.h_star = std::max(0.0, kSqrt2 * (1.0 - fz.total_time));
    fe.limit_over_t = sum_ab + *fe.h_star;
    return fe;
  }

  fe.feasible = false;
  // Highest count of fully crossable obstacles (0 when even the first fails).
  std::size_t lhat = 0;
  double t_lhat = 0.0;
  for (std::size_t k = L.size() - 1; k >= 1; --k) {
    ObstacleLandscape trunc{{L.a.begin(), L.a.begin() + k},
                            {L.b.begin(), L.b.begin() + k}};
    const double T = total_time_of(trunc);
    if (T <= 1.0 + kFeasibleSlack) {
      lhat = k;
      t_lhat = T;
      break;
    }
  }
  double base = 0.0;
  for (std::size_t i = 0; i < lhat; ++i) base += to_double(L.a[i] + L.b[i]);
  const double a_next = to_double(L.a[lhat]);
  const double rem = kSqrt2 * (1.0 - t_lhat);

  PartialCrossing pc;
  pc.ell_hat_star = lhat;
  if (rem <= a_next) {
    fe.limit_over_t = base + rem;
  } else {
    // Deepest feasible partial width b* of obstacle lhat+1 by bisection; total
    // crossing time is continuous and strictly increasing in the final b.
    auto total_with = [&](const Rational& bpart) {
      ObstacleLandscape ext{{L.a.begin(), L.a.begin() + lhat + 1},
                            {L.b.begin(), L.b.begin() + lhat}};
      ext.b.push_back(bpart);
      return total_time_of(ext);
    };
    const Rational bmax = L.b[lhat];
    Rational lo = bmax / Rational(boost::multiprecision::cpp_int(1) << 60);
    Rational hi = bmax;
    double t_lo = total_with(lo), t_hi = total_with(hi);
    if (t_lo > t_hi)
      throw std::logic_error("partial-crossing time not monotone in b");
    assert(t_hi > 1.0 && t_lo <= 1.0);
    for (int it = 0; it < 60; ++it) {
      const Rational mid = (lo + hi) / 2;
      const double tm = total_with(mid);
      if (tm > t_hi || tm < t_lo)
        throw std::logic_error("partial-crossing time not monotone in b");
      if (tm <= 1.0) {
        lo = mid;
        t_lo = tm;
      } else {
        hi = mid;
        t_hi = tm;
      }
    }
    pc.b_star = to_double(lo);
    fe.limit_over_t = base + a_next + *pc.b_star;
  }
  fe.partial = pc;
  return fe;
}

}  // namespace obbm
