#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace isingotto {

struct RootOptions {
  double abs_tol = 1e-10;
  int max_iterations = 200;
};

struct Root {
  double x;
  double residual;
  int iterations;
};

// Brent's method on a bracket with f(a) f(b) <= 0: inverse quadratic
// interpolation or secant steps, falling back to bisection whenever the
// interpolated point is not safely inside the bracket. Throws BracketFailure
// if the endpoints do not bracket a root or the iteration budget runs out.
Root brent_root(const std::function<double(double)>& f, double a, double b,
                const RootOptions& options = {});

// Same, reusing already computed endpoint values.
Root brent_root(const std::function<double(double)>& f, double a, double fa, double b, double fb,
                const RootOptions& options = {});

// `count` points from lo to hi in geometric progression (both included).
std::vector<double> geometric_grid(double lo, double hi, int count);

struct Bracket {
  double a, fa;
  double b, fb;
};

// First adjacent pair of grid points across which f changes sign, scanning in
// grid order. Points where f is exactly zero or not finite are skipped.
std::optional<Bracket> scan_for_sign_change(const std::function<double(double)>& f,
                                            std::span<const double> grid);

}  // namespace isingotto
