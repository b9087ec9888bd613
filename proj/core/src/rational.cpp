#include "obbm/rational.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace obbm {

namespace {
std::string trim(const std::string& s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}
}  // namespace

Rational parse_rational(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  using Int = boost::multiprecision::cpp_int;
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(t));
    Int num(trim(t.substr(0, slash)));
    Int den(trim(t.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("bad rational literal '" + text + "': " + e.what());
  }
}

std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite double");
  int exp = 0;
  double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
  auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(scaled);
  boost::multiprecision::cpp_int pow2 = boost::multiprecision::cpp_int(1) << std::abs(exp);
  if (exp >= 0) return r * Rational(pow2);
  return r / Rational(pow2);
}

}  // namespace obbm
