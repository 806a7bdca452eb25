#pragma once

#include <functional>
#include <span>

namespace isingotto {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  // Subinterval budget over the whole range (including the break pieces).
  unsigned max_intervals = 2000;
};

// Process-wide defaults used by every thermodynamic-limit integral. Meant to be
// set once at startup (the CLI's --quad-tol); reads are lock-free.
QuadratureOptions quadrature_defaults();
void set_quadrature_defaults(const QuadratureOptions& options);

// Globally adaptive 15-point Gauss-Kronrod on [a, b], split first at the
// interior `breaks`; the interval with the largest error is bisected until the
// summed error meets the tolerance.
// Throws QuadratureFailure when the error estimate exceeds
// max(rel_tol * integral of |f|, abs_tol) on any piece.
double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breaks = {},
                 const QuadratureOptions& options = quadrature_defaults());

}  // namespace isingotto
