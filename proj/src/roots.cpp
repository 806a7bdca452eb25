#include "isingotto/roots.hpp"

#include <limits>
#include <sstream>

#include "isingotto/errors.hpp"

namespace isingotto {

Root brent_root(const std::function<double(double)>& f, double a, double b,
                const RootOptions& options) {
  return brent_root(f, a, f(a), b, f(b), options);
}

Root brent_root(const std::function<double(double)>& f, double a, double fa, double b, double fb,
                const RootOptions& options) {
  if (fa == 0.0) return {a, 0.0, 0};
  if (fb == 0.0) return {b, 0.0, 0};
  if ((fa > 0.0) == (fb > 0.0) || !std::isfinite(fa) || !std::isfinite(fb)) {
    std::ostringstream msg;
    msg << "no sign change on [" << a << ", " << b << "]: f = " << fa << ", " << fb;
    throw BracketFailure(msg.str());
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * eps * std::abs(b) + 0.5 * options.abs_tol;
    const double half = 0.5 * (c - b);
    if (std::abs(half) <= tol || fb == 0.0) return {b, fb, iter};

    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      const double s = fb / fa;
      double p;
      double q;
      if (a == c) {
        p = 2.0 * half * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * half * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * half * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = half;
        e = d;
      }
    } else {
      d = half;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol ? d : std::copysign(tol, half);
    fb = f(b);
  }
  std::ostringstream msg;
  msg << "root not converged after " << options.max_iterations << " iterations near " << b;
  throw BracketFailure(msg.str());
}

std::vector<double> geometric_grid(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2) {
    throw DomainError("geometric grid needs 0 < lo < hi and at least two points");
  }
  std::vector<double> grid(static_cast<std::size_t>(count));
  const double ratio = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) grid[static_cast<std::size_t>(i)] = lo * std::exp(ratio * i);
  grid.back() = hi;
  return grid;
}

std::optional<Bracket> scan_for_sign_change(const std::function<double(double)>& f,
                                            std::span<const double> grid) {
  std::optional<std::pair<double, double>> last;
  for (double x : grid) {
    const double fx = f(x);
    if (fx == 0.0 || !std::isfinite(fx)) continue;
    if (last && (last->second > 0.0) != (fx > 0.0)) {
      return Bracket{last->first, last->second, x, fx};
    }
    last = {x, fx};
  }
  return std::nullopt;
}

}  // namespace isingotto
