#include "isingotto/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "isingotto/errors.hpp"
#include "isingotto/quadrature.hpp"

namespace isingotto {

void ModelParams::validate() const {
  if (!(g > 0.0) || !std::isfinite(g)) {
    std::ostringstream msg;
    msg << "coupling g must be positive and finite, got " << g;
    throw DomainError(msg.str());
  }
  if (!std::isfinite(h)) throw DomainError("transverse field h must be finite");
  if (n_sites) {
    if (*n_sites < 2 || *n_sites % 2 != 0) {
      std::ostringstream msg;
      msg << "finite chains need an even number of sites >= 2, got " << *n_sites;
      throw DomainError(msg.str());
    }
  }
}

double omega(double g, double h, double theta) {
  // Written so no cancellation happens next to either critical point:
  // (h - g)^2 + 4 g h sin^2(theta/2) for h >= 0 (gap at theta = 0),
  // (h + g)^2 - 4 g h sin^2((pi - theta)/2) for h < 0 (gap at theta = pi).
  double radicand;
  if (h >= 0.0) {
    const double s = std::sin(0.5 * theta);
    radicand = (h - g) * (h - g) + 4.0 * g * h * s * s;
  } else {
    const double c = std::sin(0.5 * (std::numbers::pi - theta));
    radicand = (h + g) * (h + g) - 4.0 * g * h * c * c;
  }
  return 2.0 * std::sqrt(std::max(radicand, 0.0));
}

double field_projection(double g, double h, double theta) {
  if (h >= 0.0) {
    const double s = std::sin(0.5 * theta);
    return (h - g) + 2.0 * g * s * s;
  }
  const double c = std::sin(0.5 * (std::numbers::pi - theta));
  return (h + g) - 2.0 * g * c * c;
}

double domega_dh(double g, double h, double theta) {
  const double w = omega(g, h, theta);
  if (w == 0.0) {
    std::ostringstream msg;
    msg << "d omega/dh is singular at g = h = " << g << ", theta = " << theta;
    throw SingularPoint(msg.str());
  }
  return 4.0 * field_projection(g, h, theta) / w;
}

std::vector<double> mode_angles(int n_sites) {
  if (n_sites < 1) throw DomainError("mode_angles needs at least one site");
  std::vector<double> angles(static_cast<std::size_t>(n_sites));
  for (int j = 1; j <= n_sites; ++j) {
    angles[static_cast<std::size_t>(j - 1)] = std::numbers::pi * (2.0 * j - 1.0) / n_sites;
  }
  return angles;
}

std::vector<double> theta_breakpoints(double g, double h) {
  std::vector<double> breaks;
  const double scale = std::sqrt(std::abs(g * h));
  if (scale == 0.0) return breaks;
  // h ~ g closes the gap at theta = 0, h ~ -g at theta = pi.
  const double dist = std::min(std::abs(h - g), std::abs(h + g));
  if (dist >= 1e-3 * g) return breaks;
  const double width = dist / scale;
  for (double k : {1.0, 10.0, 100.0}) {
    const double t = std::max(width, 1e-12) * k;
    if (t < 0.5) breaks.push_back(t);
  }
  breaks.push_back(0.5);
  if (h < 0.0) {
    for (double& b : breaks) b = std::numbers::pi - b;
    std::reverse(breaks.begin(), breaks.end());
  }
  return breaks;
}

double mode_average(const ModelParams& p, const std::function<double(double)>& f) {
  if (p.n_sites) {
    double sum = 0.0;
    for (double theta : mode_angles(*p.n_sites)) sum += f(theta);
    return sum / *p.n_sites;
  }
  const auto breaks = theta_breakpoints(p.g, p.h);
  return integrate(f, 0.0, std::numbers::pi, breaks) / std::numbers::pi;
}

GroundStateEnergy ground_state_energy(const ModelParams& p) {
  p.validate();
  const double per_site = -0.5 * mode_average(p, [&](double t) { return omega(p, t); });
  GroundStateEnergy e{per_site, std::nullopt};
  if (p.n_sites) e.total = per_site * *p.n_sites;
  return e;
}

}  // namespace isingotto
