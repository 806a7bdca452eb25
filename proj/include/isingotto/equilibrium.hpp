#pragma once

#include <string_view>

#include "isingotto/dispersion.hpp"

namespace isingotto {

// A chain in equilibrium with a bath at `temperature` (k_B T, same units as g).
struct ThermalState {
  ModelParams params;
  double temperature = 1.0;

  void validate() const;  // params valid and temperature > 0
};

// Evaluators for the transverse magnetization m(T). Only Exact is exact; the
// rest are the analytic approximations, returned without clamping |m| <= 1.
enum class EquilibriumModel {
  Exact,
  HighT,           // (h/T) [1 - (2g^2 + h^2) / 3T^2]
  LinearH,         // (h/2g) [tanh x + x sech^2 x], x = g/T
  ThirdOrder,      // LinearH plus the h^3 correction
  BoltzmannModes,  // m(0) plus the e^{-omega/T} leading thermal term
  QuasiparticleDW, // m(0) plus the domain-wall gas, mu(theta) = 2(g - h cos theta)
  NonInteracting,  // tanh(h/T)
};

std::string_view to_string(EquilibriumModel model);
// Accepts the kebab-case names printed by to_string ("exact", "linear-h", ...).
EquilibriumModel parse_equilibrium_model(std::string_view name);

// All functions below return per-site values. A finite n_sites in the params
// replaces the Brillouin-zone integral by the sum over the N antiperiodic modes.

// f = -T [ln 2 + <ln cosh(omega / 2T)>]
double free_energy(const ThermalState& s);
// u = e0 + <omega n_F(omega, T)> = -<(omega/2) tanh(omega / 2T)>
double internal_energy(const ThermalState& s);
// s = (u - f) / T, evaluated mode by mode as ln(1 + e^{-x}) + x n_F so it stays
// accurate when u - f underflows at low T.
double entropy(const ThermalState& s);

// m = -df/dh.
double magnetization(const ThermalState& s, EquilibriumModel model = EquilibriumModel::Exact);

// T -> 0 limit of the given model (<(d omega/dh)/2> for Exact). HighT has no
// such limit and throws DomainError.
double zero_temperature_magnetization(const ModelParams& p,
                                      EquilibriumModel model = EquilibriumModel::Exact);

// dm/dT = -(1/T^2) <(h - g cos theta) sech^2(omega / 2T)>.
double dM_dT(const ThermalState& s);

// dm/dT of any model: analytic for Exact and LinearH, central difference otherwise.
double magnetization_slope(const ThermalState& s, EquilibriumModel model);

}  // namespace isingotto
