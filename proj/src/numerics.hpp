#pragma once

#include <cmath>
#include <numbers>

namespace isingotto::detail {

inline double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

inline double sech2(double x) {
  const double c = std::cosh(x);
  return 1.0 / (c * c);
}

// tanh(x) / x, continuous through x = 0.
inline double tanhc(double x) {
  return std::abs(x) < 1e-8 ? 1.0 - x * x / 3.0 : std::tanh(x) / x;
}

// Fermi occupation 1 / (e^x + 1).
inline double fermi(double x) { return 0.5 * (1.0 - std::tanh(0.5 * x)); }

// fermi(a) - fermi(b) = sinh((b - a)/2) / (2 cosh(a/2) cosh(b/2)), evaluated in
// logs so neither the 1 - 1 cancellation at large a, b nor the one at a ~ b
// loses digits.
inline double occupation_difference(double a, double b) {
  const double d = 0.5 * (b - a);
  if (d == 0.0) return 0.0;
  const double ad = std::abs(d);
  const double log_sinh = ad + std::log(-std::expm1(-2.0 * ad)) - std::numbers::ln2;
  const double log_value = log_sinh - log_cosh(0.5 * a) - log_cosh(0.5 * b) - std::numbers::ln2;
  return std::copysign(std::exp(log_value), d);
}

}  // namespace isingotto::detail
