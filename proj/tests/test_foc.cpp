#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "obbm/errors.hpp"
#include "obbm/foc.hpp"

#include <cmath>
#include <random>

using namespace obbm;

TEST_CASE("quartic coefficients match the closed form") {
  const auto q1 = quartic_coefficients(1, 1, 0, 0);
  CHECK(q1.c == std::array<double, 5>{1, 0, -1.5, 0, 0});
  const auto q2 = quartic_coefficients(1, 1, 1, 0);
  CHECK(q2.c == std::array<double, 5>{1, 2, -0.5, -1, 0});
  const auto q3 = quartic_coefficients(2, 2, 0, 0);
  CHECK(q3.c == std::array<double, 5>{1, 0, -6, 0, 0});
}

TEST_CASE("discriminant vanishes on the symmetric double-root case") {
  const auto rc = classify_roots(1, 1, 0, 0);
  CHECK(rc.delta == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rc.kind == RootKind::DoubleRootCase);
  // x^4 - 1.5 x^2 = x^2 (x^2 - 1.5): roots -sqrt(1.5), 0 (double), sqrt(1.5).
  REQUIRE(rc.roots.size() == 4);
  CHECK(rc.roots[0] == doctest::Approx(-std::sqrt(1.5)));
  CHECK(rc.roots[1] == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(rc.roots[2] == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(rc.roots[3] == doctest::Approx(std::sqrt(1.5)));
}

TEST_CASE("discriminant is even in the exponent gap") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> w(0.05, 2.0), g(-1.5, 1.5);
  for (int trial = 0; trial < 1000; ++trial) {
    const double a = w(rng), b = w(rng), d = g(rng);
    CHECK(quartic_discriminant(a, b, d, 0.0) ==
          doctest::Approx(quartic_discriminant(a, b, 0.0, d)).epsilon(1e-12));
  }
}

TEST_CASE("solve_step reproduces the symmetric closed form") {
  const auto s = solve_step(1, 1, 0, 0, 10);
  const double f = std::sqrt(1.5);
  CHECK(s.x == doctest::Approx(f).epsilon(1e-12));
  CHECK(s.y == doctest::Approx(1.0 / (2.0 * (f - 1.0 / (2.0 * f)))).epsilon(1e-12));

  const auto s2 = solve_step(0.3, 0.2, 0, 0, 10);
  CHECK(s2.x == doctest::Approx(0.3139888).epsilon(1e-6));
  CHECK(s2.y == doctest::Approx(0.1171841).epsilon(1e-6));
}

TEST_CASE("solve_step signals an empty step domain") {
  CHECK_THROWS_AS(solve_step(1, 1, 0, 100, 10), InfeasibleStep);
}

TEST_CASE("returned solutions satisfy the stationarity residual and uniqueness") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> w(0.05, 2.0), c(0.0, 1.5);
  int solved = 0;
  while (solved < 1000) {
    const double a = w(rng), b = w(rng), cp = c(rng), cn = c(rng);
    StepSolution s;
    try {
      s = solve_step(a, b, cp, cn);
    } catch (const InfeasibleStep&) {
      continue;
    }
    ++solved;
    const double denom = cp + s.x - a * a / (2.0 * s.x) - cn;
    const double residual =
        b * b / (2.0 * denom * denom) - 1.0 / (1.0 + a * a / (2.0 * s.x * s.x));
    CHECK(std::abs(residual) < 1e-9);
    CHECK(s.x > 0);
    CHECK(s.y > 0);
    CHECK(s.x + s.y <= 16.0);

    // Exactly one real root lies in the step domain.
    int in_domain = 0;
    for (double r : real_roots(quartic_coefficients(a, b, cp, cn))) {
      if (!(r > 0)) continue;
      const double den = cp + r - a * a / (2.0 * r) - cn;
      if (!(den > 0)) continue;
      if (r + b * b / (2.0 * den) > 16.0) continue;
      ++in_domain;
    }
    CHECK(in_domain == 1);

    // Strict local minimum of the per-step time at x (second-order check).
    auto step_time = [&](double x) {
      return x + b * b / (2.0 * (cp + x - a * a / (2.0 * x) - cn));
    };
    const double h = 1e-5 * (1.0 + s.x);
    CHECK(step_time(s.x + h) > step_time(s.x));
    CHECK(step_time(s.x - h) > step_time(s.x));
  }
}

TEST_CASE("classification matches a plain eigenvalue count away from the boundary") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> w(0.05, 2.0), c(0.0, 1.5);
  for (int trial = 0; trial < 2000; ++trial) {
    const double a = w(rng), b = w(rng), cp = c(rng), cn = c(rng);
    const auto rc = classify_roots(a, b, cp, cn);
    if (rc.kind == RootKind::DoubleRootCase) continue;  // measure-zero boundary
    const std::size_t expected = rc.kind == RootKind::FourSimpleReal ? 4 : 2;
    CHECK(rc.roots.size() == expected);
  }
}

TEST_CASE("finite-difference derivatives have the monotone signs") {
  const auto d = step_derivatives(1, 1, 0.5, 0.5, 1e-5);
  CHECK(d.dx_dcnext >= -1e-6);   // own next-exponent pushes x up
  CHECK(d.dx_dcprev <= 1e-6);    // inherited exponent relaxes x

  // Central differences converge at second order.
  const auto d1 = step_derivatives(0.7, 0.9, 0.4, 0.2, 1e-3);
  const auto d2 = step_derivatives(0.7, 0.9, 0.4, 0.2, 5e-4);
  const auto d4 = step_derivatives(0.7, 0.9, 0.4, 0.2, 2.5e-4);
  const double e1 = std::abs(d1.dx_dcnext - d4.dx_dcnext);
  const double e2 = std::abs(d2.dx_dcnext - d4.dx_dcnext);
  CHECK(e2 < e1);
}
