#pragma once

#include <optional>
#include <span>
#include <vector>

#include "isingotto/equilibrium.hpp"
#include "isingotto/roots.hpp"

namespace isingotto {

// Sign-scan grid used to bracket every landmark: 64 geometric points over
// [1e-3 g, 10 g].
inline constexpr int kScanPoints = 64;
inline constexpr double kScanLow = 1e-3;
inline constexpr double kScanHigh = 10.0;

// Temperature where m(T) peaks (dm/dT = 0). Exact needs 0 < h < g and throws
// NoPeak otherwise; LinearH gives the same T for every h > 0.
double magnetization_peak_temperature(double g, double h, EquilibriumModel model,
                                      const RootOptions& options = {});

// Temperature above the peak where m(T) returns to m(0).
double equal_magnetization_temperature(double g, double h, EquilibriumModel model,
                                       const RootOptions& options = {});

// Work stroke used when tracing W = 0: infinitesimal (m(T_C) = m(T_H)) or a
// finite delta_h centred on the grid field.
struct StrokeMode {
  std::optional<double> delta_h;

  static StrokeMode infinitesimal() { return {}; }
  static StrokeMode finite(double delta_h) { return {delta_h}; }
};

struct BoundaryPoint {
  double h;
  double t_cold;
  // W / delta_h per site at the root (m(T_H) - m(T_C) for infinitesimal strokes).
  double residual;
};

struct BoundaryCurve {
  std::vector<BoundaryPoint> points;  // ascending h
  std::vector<double> no_root;        // fields with no W = 0 crossing in (0, t_hot)
};

// Engine/accelerator boundary: for each h, the lowest t_cold in (0, t_hot)
// where the work changes sign. Grid points are solved on `threads` workers.
BoundaryCurve w_zero_curve(double g, double t_hot, StrokeMode mode, std::span<const double> h_grid,
                           int threads = 1, const RootOptions& options = {});

struct ScalingRow {
  double h;
  double t_cold;
  double gap_scale;  // sqrt(g^2 - h^2)
};

struct ScalingCheck {
  std::vector<ScalingRow> rows;
  std::vector<double> no_root;
  // Least-squares c in t_cold = c sqrt(g^2 - h^2).
  double constant = 0.0;
  std::vector<double> residuals;
  double spearman = 0.0;
};

// Near-critical check of t_cold ~ sqrt(g^2 - h^2) along the W = 0 curve;
// samples must lie in [0.7 g, 0.99 g].
ScalingCheck near_critical_scaling_check(double g, double t_hot, std::span<const double> h_samples,
                                         int threads = 1);

// Spearman rank correlation (ties get their average rank).
double spearman_correlation(std::span<const double> x, std::span<const double> y);

}  // namespace isingotto
