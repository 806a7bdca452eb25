#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace isingotto {

// Couplings of H = -g sum sx_j sx_{j+1} - h sum sz_j on a periodic chain.
// Units: k_B = hbar = 1, every energy and temperature is in the same unit as g.
struct ModelParams {
  double g = 1.0;
  double h = 0.0;
  // Number of sites; empty means the thermodynamic limit.
  std::optional<int> n_sites;

  static ModelParams thermodynamic(double g, double h) { return {g, h, std::nullopt}; }
  static ModelParams finite(double g, double h, int n) { return {g, h, n}; }

  bool is_thermodynamic_limit() const { return !n_sites.has_value(); }

  // g > 0; a finite chain must have an even number of sites >= 2.
  void validate() const;
};

// Single-fermion energy omega(theta) = 2 sqrt(h^2 + g^2 - 2 g h cos theta).
double omega(double g, double h, double theta);
inline double omega(const ModelParams& p, double theta) { return omega(p.g, p.h, theta); }

// h - g cos theta, split like omega so it keeps its digits next to h = +-g.
double field_projection(double g, double h, double theta);

// d omega / dh = 4 (h - g cos theta) / omega. Throws SingularPoint where omega = 0.
double domega_dh(double g, double h, double theta);
inline double domega_dh(const ModelParams& p, double theta) { return domega_dh(p.g, p.h, theta); }

// Antiperiodic-sector angles pi (2j - 1) / N, j = 1..N.
std::vector<double> mode_angles(int n_sites);

// Interior points where [0, pi] integrands change character: near the critical
// point omega has a kink of width ~|h - g| at theta = 0 (at theta = pi for h ~ -g).
std::vector<double> theta_breakpoints(double g, double h);

// Mode average <f> over the Brillouin zone: (1/pi) int_0^pi f in the
// thermodynamic limit, (1/N) sum_j f(theta_j) for a finite chain.
double mode_average(const ModelParams& p, const std::function<double(double)>& f);

struct GroundStateEnergy {
  double per_site;
  // Extensive value; absent in the thermodynamic limit.
  std::optional<double> total;
};

// E0 = -(1/2) sum_j omega(theta_j), or its per-site integral in the limit.
GroundStateEnergy ground_state_energy(const ModelParams& p);

}  // namespace isingotto
