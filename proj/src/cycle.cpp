#include "isingotto/cycle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "isingotto/equilibrium.hpp"
#include "isingotto/errors.hpp"
#include "isingotto/quadrature.hpp"
#include "numerics.hpp"

namespace isingotto {

namespace {

void check_temperatures(double t_hot, double t_cold) {
  if (!(t_cold > 0.0) || !(t_hot >= t_cold) || !std::isfinite(t_hot)) {
    std::ostringstream msg;
    msg << "cycle needs t_hot >= t_cold > 0, got t_hot = " << t_hot << ", t_cold = " << t_cold;
    throw DomainError(msg.str());
  }
}

void check_coupling(double g) { ModelParams::thermodynamic(g, 0.0).validate(); }

// Mode average for a cycle whose two fields each may sit near the critical point.
double cycle_average(const CycleSpec& spec, std::optional<int> n_sites,
                     const std::function<double(double)>& f) {
  if (n_sites) return mode_average(ModelParams::finite(spec.g, spec.h_hot, *n_sites), f);
  std::vector<double> breaks = theta_breakpoints(spec.g, spec.h_hot);
  for (double b : theta_breakpoints(spec.g, spec.h_cold)) breaks.push_back(b);
  return integrate(f, 0.0, std::numbers::pi, breaks) / std::numbers::pi;
}

}  // namespace

void CycleSpec::validate() const {
  check_coupling(g);
  if (!std::isfinite(h_hot) || !std::isfinite(h_cold)) throw DomainError("fields must be finite");
  check_temperatures(t_hot, t_cold);
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::Engine: return "engine";
    case Regime::Accelerator: return "accelerator";
    case Regime::Refrigerator: return "refrigerator";
    case Regime::Heater: return "heater";
    case Regime::Boundary: return "boundary";
  }
  return "unknown";
}

Regime classify(double work, double q_hot, double q_cold, double zero_tolerance) {
  if (std::abs(work) <= zero_tolerance || std::abs(q_hot) <= zero_tolerance ||
      std::abs(q_cold) <= zero_tolerance) {
    return Regime::Boundary;
  }
  if (work < 0.0) {
    return (q_hot > 0.0 && q_cold < 0.0) ? Regime::Engine : Regime::Boundary;
  }
  if (q_hot > 0.0 && q_cold < 0.0) return Regime::Accelerator;
  if (q_hot < 0.0 && q_cold > 0.0) return Regime::Refrigerator;
  if (q_hot < 0.0 && q_cold < 0.0) return Regime::Heater;
  return Regime::Boundary;
}

namespace {

struct ThermalGap {
  double du;  // u(T_H) - u(T_C)
  double dm;  // m(T_H) - m(T_C)
};

// Hot-minus-cold differences as single integrals over n(T_H) - n(T_C), so they
// keep their sign when both occupations are exponentially small.
ThermalGap thermal_gap(const ModelParams& p, double t_hot, double t_cold) {
  auto gap = [&](double w) { return detail::occupation_difference(w / t_hot, w / t_cold); };
  const double du = mode_average(p, [&](double th) {
    const double w = omega(p, th);
    return w * gap(w);
  });
  // m = <(d omega/dh / 2) tanh(omega / 2T)> and tanh(x/2) = 1 - 2 n(x).
  const double dm = mode_average(p, [&](double th) {
    const double w = omega(p, th);
    return w == 0.0 ? 0.0 : -4.0 * field_projection(p.g, p.h, th) / w * gap(w);
  });
  return {du, dm};
}

}  // namespace

double infinitesimal_work(double g, double h, double t_hot, double t_cold, double delta_h) {
  check_temperatures(t_hot, t_cold);
  const auto p = ModelParams::thermodynamic(g, h);
  p.validate();
  if (t_hot == t_cold) return 0.0;
  return delta_h * thermal_gap(p, t_hot, t_cold).dm;
}

Heats first_order_heats(double g, double h, double t_hot, double t_cold, double delta_h) {
  check_temperatures(t_hot, t_cold);
  const auto p = ModelParams::thermodynamic(g, h);
  p.validate();
  const ThermalGap d = thermal_gap(p, t_hot, t_cold);
  // du/dh = T dm/dT - m (Maxwell relation dS/dh = dm/dT); the m terms collect
  // into (dh/2)(m_C - m_H).
  const double slopes = 0.5 * delta_h * (t_hot * dM_dT({p, t_hot}) + t_cold * dM_dT({p, t_cold}));
  const double shift = -0.5 * delta_h * d.dm;
  return {d.du + slopes + shift, -d.du - slopes + shift};
}

CycleResult infinitesimal_cycle(double g, double h, double t_hot, double t_cold, double delta_h,
                                double zero_tolerance) {
  const double w = infinitesimal_work(g, h, t_hot, t_cold, delta_h);
  const Heats q = first_order_heats(g, h, t_hot, t_cold, delta_h);
  return {w, q.q_hot, q.q_cold, classify(w, q.q_hot, q.q_cold, zero_tolerance), zero_tolerance};
}

CycleResult finite_cycle(const CycleSpec& spec, double zero_tolerance, std::optional<int> n_sites) {
  spec.validate();
  if (n_sites) ModelParams::finite(spec.g, spec.h_hot, *n_sites).validate();
  const double g = spec.g;
  auto occupation_gap = [&](double wh, double wc) {
    return detail::occupation_difference(wh / spec.t_hot, wc / spec.t_cold);
  };
  const double work = cycle_average(spec, n_sites, [&](double th) {
    const double wh = omega(g, spec.h_hot, th);
    const double wc = omega(g, spec.h_cold, th);
    return (wc - wh) * occupation_gap(wh, wc);
  });
  const double q_hot = cycle_average(spec, n_sites, [&](double th) {
    const double wh = omega(g, spec.h_hot, th);
    const double wc = omega(g, spec.h_cold, th);
    return wh * occupation_gap(wh, wc);
  });
  const double q_cold = cycle_average(spec, n_sites, [&](double th) {
    const double wh = omega(g, spec.h_hot, th);
    const double wc = omega(g, spec.h_cold, th);
    return -wc * occupation_gap(wh, wc);
  });
  return {work, q_hot, q_cold, classify(work, q_hot, q_cold, zero_tolerance), zero_tolerance};
}

Heats low_temperature_heats(const CycleSpec& spec) {
  spec.validate();
  const double gap_hot = std::abs(spec.h_hot - spec.g);
  const double gap_cold = std::abs(spec.h_cold - spec.g);
  const double boltz_hot = std::exp(-gap_hot / spec.t_hot);
  const double boltz_cold = std::exp(-gap_cold / spec.t_cold);
  return {2.0 * gap_hot * (boltz_hot - boltz_cold), 2.0 * gap_cold * (boltz_cold - boltz_hot)};
}

FieldWindow refrigerator_window(double g, double delta_h, double t_hot, double t_cold) {
  check_coupling(g);
  check_temperatures(t_hot, t_cold);
  if (delta_h == 0.0 || !std::isfinite(delta_h)) {
    throw DomainError("the refrigerator window needs a nonzero, finite delta_h");
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double near = g + delta_h * t_hot / (t_hot + t_cold);
  if (t_hot == t_cold) {
    return delta_h > 0.0 ? FieldWindow{near, inf} : FieldWindow{-inf, near};
  }
  const double far = g + delta_h * t_hot / (t_hot - t_cold);
  return delta_h > 0.0 ? FieldWindow{near, far} : FieldWindow{far, near};
}

CarnotPoint carnot_point(double g, double t_hot, double t_cold) {
  check_coupling(g);
  check_temperatures(t_hot, t_cold);
  // Through r = T_H / T_C so that h_H h_C = g^2 survives rounding.
  const double r = t_hot / t_cold;
  return {g / r, g * r};
}

}  // namespace isingotto
