#pragma once

#include <array>
#include <vector>

namespace obbm {

// Monic quartic in descending order: c[0] x^4 + c[1] x^3 + ... + c[4].
struct QuarticCoefficients {
  std::array<double, 5> c{};
};

// The stationarity quartic of the per-obstacle first-order condition, with
// gap d = c_prev - c_next:
//   x^4 + 2d x^3 + (d^2 - a^2 - b^2/2) x^2 - a^2 d x + (a^2/4)(a^2 - b^2).
QuarticCoefficients quartic_coefficients(double a, double b, double c_prev,
                                         double c_next);

enum class RootKind { FourSimpleReal, TwoRealTwoComplex, DoubleRootCase };

struct RootClassification {
  double delta = 0.0;          // quartic discriminant
  RootKind kind = RootKind::FourSimpleReal;
  std::vector<double> roots;   // real roots, ascending, with multiplicities
};

// Closed-form discriminant (even in c_prev - c_next).
double quartic_discriminant(double a, double b, double c_prev, double c_next);

// Classification per the discriminant sign, |delta| < 1e-9 * scale treated as
// the double-root case; roots via companion-matrix eigenvalues + Newton polish.
RootClassification classify_roots(double a, double b, double c_prev, double c_next);

// All real roots of the quartic, ascending (eigenvalues with relative
// imaginary part below 1e-9 treated as real), Newton-polished.
std::vector<double> real_roots(const QuarticCoefficients& q);

struct StepSolution {
  double x = 0.0;
  double y = 0.0;
};

// Per-obstacle optimizer: x is the largest real quartic root with x > 0,
// positive denominator c_prev + x - a^2/(2x) - c_next, and x + y <= N;
// y = b^2 / (2 * denominator). Throws InfeasibleStep when no root qualifies.
StepSolution solve_step(double a, double b, double c_prev, double c_next,
                        double time_cap = 16.0);

// Central finite differences of x with respect to c_prev and c_next.
struct StepDerivatives {
  double dx_dcprev = 0.0;
  double dx_dcnext = 0.0;
};

StepDerivatives step_derivatives(double a, double b, double c_prev, double c_next,
                                 double h, double time_cap = 16.0);

}  // namespace obbm
