#include "isingotto/equilibrium.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>

#include "isingotto/errors.hpp"
#include "isingotto/quasiparticle.hpp"
#include "numerics.hpp"

namespace isingotto {

namespace {

constexpr std::array<std::pair<EquilibriumModel, std::string_view>, 7> kModelNames{{
    {EquilibriumModel::Exact, "exact"},
    {EquilibriumModel::HighT, "high-t"},
    {EquilibriumModel::LinearH, "linear-h"},
    {EquilibriumModel::ThirdOrder, "third-order"},
    {EquilibriumModel::BoltzmannModes, "boltzmann-modes"},
    {EquilibriumModel::QuasiparticleDW, "quasiparticle-dw"},
    {EquilibriumModel::NonInteracting, "non-interacting"},
}};

using detail::log_cosh;
using detail::sech2;
using detail::tanhc;

double linear_h(double g, double h, double t) {
  const double x = g / t;
  return h / (2.0 * g) * (std::tanh(x) + x * sech2(x));
}

double third_order(double g, double h, double t) {
  const double x = g / t;
  const double th = std::tanh(x);
  const double s2 = sech2(x);
  const double cubic = 6.0 * x * x * x * s2 * s2 - th + x * s2 * (1.0 - 4.0 * x * x + 4.0 * x * th);
  return linear_h(g, h, t) - h * h * h / (16.0 * g * g * g) * cubic;
}

double high_t(double g, double h, double t) {
  return h / t * (1.0 - (2.0 * g * g + h * h) / (3.0 * t * t));
}

double boltzmann_thermal(const ThermalState& s) {
  const auto& p = s.params;
  return -mode_average(p, [&](double th) {
    const double w = omega(p, th);
    if (w == 0.0) return 0.0;
    return 4.0 * field_projection(p.g, p.h, th) / w * std::exp(-w / s.temperature);
  });
}

}  // namespace

void ThermalState::validate() const {
  params.validate();
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    std::ostringstream msg;
    msg << "temperature must be positive and finite, got " << temperature
        << " (use the zero-temperature evaluators for T = 0)";
    throw DomainError(msg.str());
  }
}

std::string_view to_string(EquilibriumModel model) {
  for (const auto& [m, name] : kModelNames) {
    if (m == model) return name;
  }
  return "unknown";
}

EquilibriumModel parse_equilibrium_model(std::string_view name) {
  for (const auto& [m, n] : kModelNames) {
    if (n == name) return m;
  }
  throw DomainError("unknown equilibrium model '" + std::string(name) + "'");
}

double free_energy(const ThermalState& s) {
  s.validate();
  const auto& p = s.params;
  const double t = s.temperature;
  const double avg = mode_average(p, [&](double th) { return log_cosh(omega(p, th) / (2.0 * t)); });
  return -t * (std::numbers::ln2 + avg);
}

double internal_energy(const ThermalState& s) {
  s.validate();
  const auto& p = s.params;
  const double t = s.temperature;
  return -0.5 * mode_average(p, [&](double th) {
    const double w = omega(p, th);
    return w * std::tanh(w / (2.0 * t));
  });
}

double entropy(const ThermalState& s) {
  s.validate();
  const auto& p = s.params;
  const double t = s.temperature;
  return mode_average(p, [&](double th) {
    const double x = omega(p, th) / t;
    return std::log1p(std::exp(-x)) + x / (std::exp(x) + 1.0);
  });
}

double zero_temperature_magnetization(const ModelParams& p, EquilibriumModel model) {
  p.validate();
  switch (model) {
    case EquilibriumModel::Exact:
    case EquilibriumModel::BoltzmannModes:
    case EquilibriumModel::QuasiparticleDW:
      return mode_average(p, [&](double th) {
        const double w = omega(p, th);
        return w == 0.0 ? 0.0 : 2.0 * field_projection(p.g, p.h, th) / w;
      });
    case EquilibriumModel::LinearH:
      return p.h / (2.0 * p.g);
    case EquilibriumModel::ThirdOrder:
      // x -> infinity: tanh -> 1 and every sech^2 term vanishes.
      return p.h / (2.0 * p.g) + p.h * p.h * p.h / (16.0 * p.g * p.g * p.g);
    case EquilibriumModel::NonInteracting:
      return p.h > 0.0 ? 1.0 : (p.h < 0.0 ? -1.0 : 0.0);
    case EquilibriumModel::HighT:
      break;
  }
  throw DomainError("the high-temperature expansion has no zero-temperature limit");
}

double magnetization(const ThermalState& s, EquilibriumModel model) {
  s.validate();
  const auto& p = s.params;
  const double t = s.temperature;
  switch (model) {
    case EquilibriumModel::Exact:
      // (d omega/dh) tanh(omega/2T) / 2 with d omega/dh = 4 (h - g cos) / omega.
      return mode_average(p, [&](double th) {
        const double w = omega(p, th);
        return field_projection(p.g, p.h, th) * tanhc(w / (2.0 * t)) / t;
      });
    case EquilibriumModel::HighT:
      return high_t(p.g, p.h, t);
    case EquilibriumModel::LinearH:
      return linear_h(p.g, p.h, t);
    case EquilibriumModel::ThirdOrder:
      return third_order(p.g, p.h, t);
    case EquilibriumModel::BoltzmannModes:
      return zero_temperature_magnetization(p, model) + boltzmann_thermal(s);
    case EquilibriumModel::QuasiparticleDW:
      return zero_temperature_magnetization(p, model) + qp_thermal_magnetization(s);
    case EquilibriumModel::NonInteracting:
      return std::tanh(p.h / t);
  }
  throw DomainError("unhandled equilibrium model");
}

double dM_dT(const ThermalState& s) {
  s.validate();
  const auto& p = s.params;
  const double t = s.temperature;
  return -mode_average(p, [&](double th) {
           return field_projection(p.g, p.h, th) * sech2(omega(p, th) / (2.0 * t));
         }) /
         (t * t);
}

double magnetization_slope(const ThermalState& s, EquilibriumModel model) {
  s.validate();
  const double t = s.temperature;
  if (model == EquilibriumModel::Exact) return dM_dT(s);
  if (model == EquilibriumModel::LinearH) {
    const double g = s.params.g;
    const double x = g / t;
    // d/dx [tanh x + x sech^2 x] = 2 sech^2 x (1 - x tanh x), dx/dT = -g/T^2.
    return s.params.h / (2.0 * g) * 2.0 * sech2(x) * (1.0 - x * std::tanh(x)) * (-g / (t * t));
  }
  const double step = 1e-5 * t;
  ThermalState up = s;
  ThermalState down = s;
  up.temperature = t + step;
  down.temperature = t - step;
  return (magnetization(up, model) - magnetization(down, model)) / (2.0 * step);
}

}  // namespace isingotto
