#pragma once

#include "obbm/landscape.hpp"
#include "obbm/plan.hpp"
#include "obbm/rational.hpp"

#include <cstdint>
#include <random>

namespace obbm::testing {

// Documented fuzz distribution: numerators and denominators uniform in 1..32.
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, 32);
  return Rational(d(rng), d(rng));
}

inline ObstacleLandscape random_landscape(std::mt19937_64& rng, std::size_t ell) {
  ObstacleLandscape L;
  for (std::size_t i = 0; i < ell; ++i) {
    L.a.push_back(random_rational(rng));
    L.b.push_back(random_rational(rng));
  }
  return L;
}

inline ObstacleLandscape scale_landscape(const ObstacleLandscape& L, const Rational& lambda) {
  ObstacleLandscape out = L;
  for (auto& v : out.a) v *= lambda;
  for (auto& v : out.b) v *= lambda;
  return out;
}

// Feasible sampler: total crossing time is homogeneous of degree 1 in the
// widths, so rescale by an exact rational just below target/total. Raw
// rejection essentially never yields a feasible multi-obstacle landscape.
inline ObstacleLandscape random_feasible_landscape(std::mt19937_64& rng,
                                                   std::size_t ell) {
  for (;;) {
    ObstacleLandscape L = random_landscape(rng, ell);
    const double total = feasibility(L).total_time;
    std::uniform_real_distribution<double> target(0.3, 0.95);
    const auto num = static_cast<long long>(std::floor(10000.0 * target(rng) / total));
    if (num < 1) continue;
    ObstacleLandscape scaled = scale_landscape(L, Rational(num, 10000));
    if (feasibility(scaled).feasible) return scaled;
  }
}

// The twelve mediant "shift" implications over positive rationals
// r1 = b1/a1, r2 = b2/a2, r3 = b3/a3, r12 = (b1+b2)/(a1+a2),
// r23 = (b2+b3)/(a2+a3). Returns false on the first violated implication.
inline bool mediant_implications_hold(const Rational& a1, const Rational& b1,
                                      const Rational& a2, const Rational& b2,
                                      const Rational& a3, const Rational& b3,
                                      int* premise_hits = nullptr) {
  const Rational r1 = b1 / a1, r2 = b2 / a2, r3 = b3 / a3;
  const Rational r12 = (b1 + b2) / (a1 + a2), r23 = (b2 + b3) / (a2 + a3);
  struct Rule {
    bool premise;
    bool conclusion;
  };
  const Rule rules[12] = {
      {r1 < r23 && r2 < r3, r12 < r3},                  // A
      {r12 < r3 && r1 < r2, r1 < r23},                  // B
      {r1 < r2 && r2 < r3, r1 < r23},                   // C
      {r1 < r2 && r2 < r3, r12 < r3},                   // D
      {r12 < r3 && (r1 >= r2 || r1 >= r23), r2 < r3},   // E
      {r1 < r23 && (r2 >= r3 || r12 >= r3), r1 < r2},   // F
      {r1 >= r23 && r2 >= r3, r12 >= r3},               // G
      {r12 >= r3 && r1 >= r2, r1 >= r23},               // H
      {r1 >= r2 && r2 >= r3, r12 >= r3},                // I
      {r1 >= r2 && r2 >= r3, r1 >= r23},                // J
      {r1 >= r23 && (r2 < r3 || r12 < r3), r1 >= r2},   // K
      {r12 >= r3 && (r1 < r2 || r1 < r23), r2 >= r3},   // L
  };
  bool ok = true;
  for (const Rule& r : rules) {
    if (r.premise && premise_hits) ++*premise_hits;
    if (r.premise && !r.conclusion) ok = false;
  }
  return ok;
}

}  // namespace obbm::testing
