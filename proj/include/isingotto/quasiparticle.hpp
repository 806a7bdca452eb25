#pragma once

#include <vector>

#include "isingotto/equilibrium.hpp"

namespace isingotto {

// Single domain-wall excitations of the ferromagnet (open chain):
// |psi_k> = N_k^{-1/2} sum_{n=1}^{N-1} sin(n theta_k) |n>, theta_k = k pi / N,
// where |n> has the wall between sites n and n+1.
struct DomainWallState {
  int n_sites = 0;
  int k = 0;
  double theta = 0.0;
  // Normalised amplitudes sin(n theta_k) / sqrt(N_k), n = 1..N-1.
  std::vector<double> amplitudes;
  // N_k = sum_n sin^2(n theta_k), computed explicitly.
  double norm_sq = 0.0;
};

DomainWallState domain_wall_state(int n_sites, int k);

// mu(theta) = 2 (g - h cos theta).
double mu(const ModelParams& p, double theta);

struct QuasiparticleMagnetization {
  // sum_{n=1}^{N-1} sin(n theta_k) sin((n+1) theta_k)
  double pair_sum;
  // <psi_k| sum_j sz_j |psi_k> = (2 / N_k) pair_sum; equals 2 cos(theta_k) exactly.
  double normalized;
  // (N - 1) cos(theta_k) / 2, the large-N form of pair_sum.
  double approximation;
};

QuasiparticleMagnetization qp_magnetization(int n_sites, int k);

// Dilute wall gas: f = -(T/pi) int_0^pi e^{-mu/T} dtheta (per site).
double qp_free_energy(const ThermalState& s);

// -d qp_free_energy / dh = (2/pi) int cos(theta) e^{-mu/T} dtheta.
double qp_thermal_magnetization(const ThermalState& s);

struct QuasiparticleSlope {
  // dm/dT = (2 / pi T^2) int mu cos(theta) e^{-mu/T} dtheta
  double value;
  int sign;  // -1, 0 or +1
};

QuasiparticleSlope qp_dM_dT(const ThermalState& s);

}  // namespace isingotto
