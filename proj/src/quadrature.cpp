#include "isingotto/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "isingotto/errors.hpp"

namespace isingotto {

namespace {

std::atomic<double> g_rel_tol{QuadratureOptions{}.rel_tol};
std::atomic<double> g_abs_tol{QuadratureOptions{}.abs_tol};
std::atomic<unsigned> g_max_intervals{QuadratureOptions{}.max_intervals};

struct Piece {
  double a;
  double b;
  double value;
  double error;
  double l1;

  bool operator<(const Piece& other) const { return error < other.error; }
};

Piece rule(const std::function<double(double)>& f, double a, double b) {
  Piece p{a, b, 0.0, 0.0, 0.0};
  // max_depth = 0: a single K15/G7 pair, the adaptivity is ours.
  p.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &p.error, &p.l1);
  return p;
}

}  // namespace

QuadratureOptions quadrature_defaults() {
  return {g_rel_tol.load(std::memory_order_relaxed), g_abs_tol.load(std::memory_order_relaxed),
          g_max_intervals.load(std::memory_order_relaxed)};
}

void set_quadrature_defaults(const QuadratureOptions& options) {
  if (!(options.rel_tol > 0.0) || !(options.abs_tol >= 0.0) || options.max_intervals == 0) {
    throw DomainError("quadrature tolerances must be positive");
  }
  g_rel_tol.store(options.rel_tol, std::memory_order_relaxed);
  g_abs_tol.store(options.abs_tol, std::memory_order_relaxed);
  g_max_intervals.store(options.max_intervals, std::memory_order_relaxed);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breaks, const QuadratureOptions& options) {
  std::vector<double> nodes;
  nodes.reserve(breaks.size() + 2);
  nodes.push_back(a);
  for (double x : breaks) {
    if (x > a && x < b) nodes.push_back(x);
  }
  nodes.push_back(b);
  std::sort(nodes.begin() + 1, nodes.end() - 1);
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  std::priority_queue<Piece> pieces;
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const Piece p = rule(f, nodes[i], nodes[i + 1]);
    value += p.value;
    error += p.error;
    l1 += p.l1;
    pieces.push(p);
  }
  // Pieces narrower than this are at the resolution of double and are not split.
  const double min_width = 64.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b));

  auto target = [&] { return std::max(options.rel_tol * l1, options.abs_tol); };
  std::vector<Piece> frozen;
  while (error > target() && !pieces.empty() && pieces.size() + frozen.size() < options.max_intervals) {
    const Piece worst = pieces.top();
    pieces.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (worst.b - worst.a < min_width) {
      frozen.push_back(worst);
      continue;
    }
    const Piece left = rule(f, worst.a, mid);
    const Piece right = rule(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    pieces.push(left);
    pieces.push(right);
  }
  // Resum to shed the drift of the running updates.
  value = error = l1 = 0.0;
  for (const auto& p : frozen) {
    value += p.value;
    error += p.error;
    l1 += p.l1;
  }
  while (!pieces.empty()) {
    value += pieces.top().value;
    error += pieces.top().error;
    l1 += pieces.top().l1;
    pieces.pop();
  }
  if (!std::isfinite(value) || error > target()) {
    std::ostringstream msg;
    msg << "quadrature did not converge on [" << a << ", " << b << "]: estimate " << value << ", error "
        << error << ", |f| integral " << l1;
    throw QuadratureFailure(msg.str());
  }
  return value;
}

}  // namespace isingotto
