#include "isingotto/quasiparticle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "isingotto/errors.hpp"
#include "isingotto/quadrature.hpp"

namespace isingotto {

namespace {

void check_wall_index(int n_sites, int k) {
  if (n_sites < 3 || k < 1 || k > n_sites - 1) {
    std::ostringstream msg;
    msg << "domain-wall state needs N >= 3 and 1 <= k <= N-1, got N = " << n_sites
        << ", k = " << k;
    throw DomainError(msg.str());
  }
}

// (1/pi) int_0^pi f, or the discrete average on a finite chain.
double band_average(const ThermalState& s, const std::function<double(double)>& f) {
  if (s.params.n_sites) return mode_average(s.params, f);
  return integrate(f, 0.0, std::numbers::pi) / std::numbers::pi;
}

}  // namespace

DomainWallState domain_wall_state(int n_sites, int k) {
  check_wall_index(n_sites, k);
  DomainWallState state;
  state.n_sites = n_sites;
  state.k = k;
  state.theta = k * std::numbers::pi / n_sites;
  state.amplitudes.resize(static_cast<std::size_t>(n_sites - 1));
  for (int n = 1; n < n_sites; ++n) {
    const double a = std::sin(n * state.theta);
    state.amplitudes[static_cast<std::size_t>(n - 1)] = a;
    state.norm_sq += a * a;
  }
  const double inv = 1.0 / std::sqrt(state.norm_sq);
  for (double& a : state.amplitudes) a *= inv;
  return state;
}

double mu(const ModelParams& p, double theta) { return 2.0 * (p.g - p.h * std::cos(theta)); }

QuasiparticleMagnetization qp_magnetization(int n_sites, int k) {
  const DomainWallState state = domain_wall_state(n_sites, k);
  double pair_sum = 0.0;
  for (int n = 1; n < n_sites; ++n) {
    pair_sum += std::sin(n * state.theta) * std::sin((n + 1) * state.theta);
  }
  // sz on the wall site moves the wall by one: <n+1| sum sz |n> = 1.
  double normalized = 0.0;
  for (std::size_t n = 0; n + 1 < state.amplitudes.size(); ++n) {
    normalized += 2.0 * state.amplitudes[n] * state.amplitudes[n + 1];
  }
  return {pair_sum, normalized, 0.5 * (n_sites - 1) * std::cos(state.theta)};
}

double qp_free_energy(const ThermalState& s) {
  s.validate();
  const double t = s.temperature;
  return -t * band_average(s, [&](double th) { return std::exp(-mu(s.params, th) / t); });
}

double qp_thermal_magnetization(const ThermalState& s) {
  s.validate();
  const double t = s.temperature;
  return 2.0 * band_average(s, [&](double th) {
    return std::cos(th) * std::exp(-mu(s.params, th) / t);
  });
}

QuasiparticleSlope qp_dM_dT(const ThermalState& s) {
  s.validate();
  const double t = s.temperature;
  const double value = 2.0 / (t * t) * band_average(s, [&](double th) {
    const double e = mu(s.params, th);
    return e * std::cos(th) * std::exp(-e / t);
  });
  // Cancellation floor: the integral of |integrand|, scaled by the quadrature tolerance.
  const double magnitude = 2.0 / (t * t) * band_average(s, [&](double th) {
    const double e = mu(s.params, th);
    return std::abs(e * std::cos(th)) * std::exp(-e / t);
  });
  const double floor = 1e3 * quadrature_defaults().rel_tol * magnitude;
  const int sign = std::abs(value) <= floor ? 0 : (value > 0.0 ? 1 : -1);
  return {value, sign};
}

}  // namespace isingotto
