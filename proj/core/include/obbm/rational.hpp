#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace obbm {

// Arbitrary-precision rational: block comparisons hinge on exact <= vs <
// and fuzzed inputs overflow 64-bit cross-products.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", "p", or "-p/q" (whitespace-trimmed).
Rational parse_rational(const std::string& text);

std::string format_rational(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Exact rational from a finite double (binary expansion).
Rational rational_from_double(double v);

}  // namespace obbm
