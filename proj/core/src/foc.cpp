#include "obbm/foc.hpp"

#include "obbm/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace obbm {

QuarticCoefficients quartic_coefficients(double a, double b, double c_prev,
                                         double c_next) {
  const double d = c_prev - c_next;
  QuarticCoefficients q;
  q.c[0] = 1.0;
  q.c[1] = 2.0 * d;
  q.c[2] = d * d - a * a - b * b / 2.0;
  q.c[3] = -a * a * d;
  q.c[4] = (a * a / 4.0) * (a * a - b * b);
  return q;
}

double quartic_discriminant(double a, double b, double c_prev, double c_next) {
  const double d = c_prev - c_next;
  const double a2 = a * a, b2 = b * b, d2 = d * d;
  const double a4 = a2 * a2, a6 = a4 * a2, a8 = a4 * a4;
  const double b4 = b2 * b2, b6 = b4 * b2, b8 = b4 * b4, b10 = b8 * b2;
  const double d4 = d2 * d2, d6 = d4 * d2;
  return 0.25 * (64.0 * a8 * b4 - 48.0 * a6 * b6 + 96.0 * a6 * b4 * d2 -
                 15.0 * a4 * b8 - 48.0 * a4 * b6 * d2 + 48.0 * a4 * b4 * d4 -
                 a2 * b10 + 6.0 * a2 * b8 * d2 - 12.0 * a2 * b6 * d4 +
                 8.0 * a2 * b4 * d6);
}

namespace {

double discriminant_scale(double a, double b, double c_prev, double c_next) {
  const double d = c_prev - c_next;
  const double a2 = a * a, b2 = b * b, d2 = d * d;
  const double a4 = a2 * a2, a6 = a4 * a2, a8 = a4 * a4;
  const double b4 = b2 * b2, b6 = b4 * b2, b8 = b4 * b4, b10 = b8 * b2;
  const double d4 = d2 * d2, d6 = d4 * d2;
  const double terms[] = {64.0 * a8 * b4,      48.0 * a6 * b6,
                          96.0 * a6 * b4 * d2, 15.0 * a4 * b8,
                          48.0 * a4 * b6 * d2, 48.0 * a4 * b4 * d4,
                          a2 * b10,            6.0 * a2 * b8 * d2,
                          12.0 * a2 * b6 * d4, 8.0 * a2 * b4 * d6};
  double s = 0.0;
  for (double t : terms) s = std::max(s, 0.25 * std::abs(t));
  return s;
}

double eval(const QuarticCoefficients& q, double x) {
  return (((q.c[0] * x + q.c[1]) * x + q.c[2]) * x + q.c[3]) * x + q.c[4];
}

double eval_deriv(const QuarticCoefficients& q, double x) {
  return ((4.0 * q.c[0] * x + 3.0 * q.c[1]) * x + 2.0 * q.c[2]) * x + q.c[3];
}

double newton_polish(const QuarticCoefficients& q, double x) {
  for (int it = 0; it < 4; ++it) {
    const double p = eval(q, x);
    const double dp = eval_deriv(q, x);
    if (dp == 0.0) break;
    const double step = p / dp;
    if (!std::isfinite(step)) break;
    const double nx = x - step;
    if (std::abs(eval(q, nx)) >= std::abs(p)) break;  // no improvement (double root)
    x = nx;
  }
  return x;
}

}  // namespace

std::vector<double> real_roots(const QuarticCoefficients& q) {
  Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
  companion(0, 0) = -q.c[1];
  companion(0, 1) = -q.c[2];
  companion(0, 2) = -q.c[3];
  companion(0, 3) = -q.c[4];
  companion(1, 0) = 1.0;
  companion(2, 1) = 1.0;
  companion(3, 2) = 1.0;
  Eigen::EigenSolver<Eigen::Matrix4d> es(companion, /*computeEigenvectors=*/false);
  std::vector<double> roots;
  for (int i = 0; i < 4; ++i) {
    const auto lambda = es.eigenvalues()[i];
    if (std::abs(lambda.imag()) <= 1e-9 * (1.0 + std::abs(lambda.real())))
      roots.push_back(newton_polish(q, lambda.real()));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RootClassification classify_roots(double a, double b, double c_prev, double c_next) {
  RootClassification rc;
  rc.delta = quartic_discriminant(a, b, c_prev, c_next);
  const double tol = 1e-9 * discriminant_scale(a, b, c_prev, c_next);
  if (std::abs(rc.delta) < tol)
    rc.kind = RootKind::DoubleRootCase;
  else
    rc.kind = rc.delta > 0 ? RootKind::FourSimpleReal : RootKind::TwoRealTwoComplex;
  rc.roots = real_roots(quartic_coefficients(a, b, c_prev, c_next));
  return rc;
}

StepSolution solve_step(double a, double b, double c_prev, double c_next,
                        double time_cap) {
  if (!(a > 0) || !(b > 0)) throw std::invalid_argument("a, b must be positive");
  const QuarticCoefficients q = quartic_coefficients(a, b, c_prev, c_next);
  const std::vector<double> roots = real_roots(q);
  // Largest real root satisfying the step-domain constraints.
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    const double x = *it;
    if (!(x > 0)) break;
    const double denom = c_prev + x - a * a / (2.0 * x) - c_next;
    if (!(denom > 0)) continue;
    const double y = b * b / (2.0 * denom);
    if (!(x + y <= time_cap)) continue;
    const double residual =
        b * b / (2.0 * denom * denom) - 1.0 / (1.0 + a * a / (2.0 * x * x));
    if (std::abs(residual) > 1e-9)
      throw std::runtime_error("first-order-condition residual exceeds tolerance");
    return {x, y};
  }
  throw InfeasibleStep();
}

StepDerivatives step_derivatives(double a, double b, double c_prev, double c_next,
                                 double h, double time_cap) {
  const double xp = solve_step(a, b, c_prev + h, c_next, time_cap).x;
  const double xm = solve_step(a, b, c_prev - h, c_next, time_cap).x;
  const double xnp = solve_step(a, b, c_prev, c_next + h, time_cap).x;
  const double xnm = solve_step(a, b, c_prev, c_next - h, time_cap).x;
  return {(xp - xm) / (2.0 * h), (xnp - xnm) / (2.0 * h)};
}

}  // namespace obbm
