#include "isingotto/boundaries.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "isingotto/cycle.hpp"
#include "isingotto/errors.hpp"
#include "isingotto/parallel.hpp"

namespace isingotto {

namespace {

std::vector<double> ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

double magnetization_peak_temperature(double g, double h, EquilibriumModel model,
                                      const RootOptions& options) {
  const auto p = ModelParams::thermodynamic(g, h);
  p.validate();
  if (model == EquilibriumModel::Exact && !(h > 0.0 && h < g)) {
    std::ostringstream msg;
    msg << "m(T) is monotone for h/g = " << h / g << "; a peak needs 0 < h < g";
    throw NoPeak(msg.str());
  }
  auto slope = [&](double t) { return magnetization_slope({p, t}, model); };
  const auto grid = geometric_grid(kScanLow * g, kScanHigh * g, kScanPoints);
  const auto bracket = scan_for_sign_change(slope, grid);
  if (!bracket || !(bracket->fa > 0.0)) {
    throw NoPeak("no maximum of m(T) on [1e-3 g, 10 g] for model " +
                 std::string(to_string(model)));
  }
  return brent_root(slope, bracket->a, bracket->fa, bracket->b, bracket->fb, options).x;
}

double equal_magnetization_temperature(double g, double h, EquilibriumModel model,
                                       const RootOptions& options) {
  const double t_peak = magnetization_peak_temperature(g, h, model, options);
  const auto p = ModelParams::thermodynamic(g, h);
  const double m0 = zero_temperature_magnetization(p, model);
  auto excess = [&](double t) { return magnetization({p, t}, model) - m0; };
  const auto grid = geometric_grid(t_peak, kScanHigh * g, kScanPoints);
  const auto bracket = scan_for_sign_change(excess, grid);
  if (!bracket) {
    throw BracketFailure("m(T) does not return to m(0) below 10 g for model " +
                         std::string(to_string(model)));
  }
  return brent_root(excess, bracket->a, bracket->fa, bracket->b, bracket->fb, options).x;
}

BoundaryCurve w_zero_curve(double g, double t_hot, StrokeMode mode, std::span<const double> h_grid,
                           int threads, const RootOptions& options) {
  ModelParams::thermodynamic(g, 0.0).validate();
  if (!(t_hot > 0.0)) throw DomainError("t_hot must be positive");
  if (mode.delta_h && *mode.delta_h == 0.0) {
    throw DomainError("a finite stroke needs delta_h != 0; use the infinitesimal mode");
  }
  std::vector<double> fields(h_grid.begin(), h_grid.end());
  std::sort(fields.begin(), fields.end());

  // The trivial root t_cold = t_hot is excluded by stopping the scan just below it.
  const double scan_top = t_hot * (1.0 - 1e-4);
  std::vector<double> grid;
  if (scan_top > kScanLow * g) grid = geometric_grid(kScanLow * g, scan_top, kScanPoints);

  std::vector<std::optional<BoundaryPoint>> solved(fields.size());
  parallel_for(fields.size(), threads, [&](std::size_t i) {
    const double h = fields[i];
    // m(T) vanishes identically at h = 0, so the infinitesimal work has no sign to change.
    if (!mode.delta_h && h == 0.0) return;
    std::function<double(double)> residual;
    if (mode.delta_h) {
      const double dh = *mode.delta_h;
      residual = [=](double tc) {
        return finite_cycle(CycleSpec::centered(g, h, dh, t_hot, tc), 0.0).work / dh;
      };
    } else {
      const auto p = ModelParams::thermodynamic(g, h);
      const double m_hot = magnetization({p, t_hot});
      residual = [=](double tc) { return m_hot - magnetization({p, tc}); };
    }
    const auto bracket = scan_for_sign_change(residual, grid);
    if (!bracket) return;
    const Root root = brent_root(residual, bracket->a, bracket->fa, bracket->b, bracket->fb, options);
    solved[i] = BoundaryPoint{h, root.x, residual(root.x)};
  });

  BoundaryCurve curve;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (solved[i]) {
      curve.points.push_back(*solved[i]);
    } else {
      curve.no_root.push_back(fields[i]);
    }
  }
  return curve;
}

ScalingCheck near_critical_scaling_check(double g, double t_hot, std::span<const double> h_samples,
                                         int threads) {
  for (double h : h_samples) {
    if (h < 0.7 * g - 1e-12 || h > 0.99 * g + 1e-12) {
      std::ostringstream msg;
      msg << "scaling samples must lie in [0.7 g, 0.99 g], got h = " << h;
      throw DomainError(msg.str());
    }
  }
  const BoundaryCurve curve = w_zero_curve(g, t_hot, StrokeMode::infinitesimal(), h_samples, threads);
  ScalingCheck check;
  check.no_root = curve.no_root;
  double sxy = 0.0;
  double sxx = 0.0;
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& pt : curve.points) {
    const double x = std::sqrt(g * g - pt.h * pt.h);
    check.rows.push_back({pt.h, pt.t_cold, x});
    xs.push_back(x);
    ys.push_back(pt.t_cold);
    sxy += x * pt.t_cold;
    sxx += x * x;
  }
  if (check.rows.size() < 2) {
    throw BracketFailure("fewer than two boundary points; cannot fit the scaling");
  }
  check.constant = sxy / sxx;
  for (const auto& row : check.rows) check.residuals.push_back(row.t_cold - check.constant * row.gap_scale);
  check.spearman = spearman_correlation(xs, ys);
  return check;
}

double spearman_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DomainError("spearman correlation needs two equal-length samples of size >= 2");
  }
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  const double n = static_cast<double>(rx.size());
  const double mean = 0.5 * (n + 1.0);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace isingotto
