#pragma once

#include <optional>
#include <string_view>

#include "isingotto/dispersion.hpp"

namespace isingotto {

// One adiabatic Otto cycle: thermalise at (h_hot, t_hot), stroke to h_cold,
// thermalise at (h_cold, t_cold), stroke back.
struct CycleSpec {
  double g = 1.0;
  double h_hot = 0.0;
  double h_cold = 0.0;
  double t_hot = 1.0;
  double t_cold = 1.0;

  double delta_h() const { return h_hot - h_cold; }
  double h_av() const { return 0.5 * (h_hot + h_cold); }

  // Stroke of size delta_h centred on h_av.
  static CycleSpec centered(double g, double h_av, double delta_h, double t_hot, double t_cold) {
    return {g, h_av + 0.5 * delta_h, h_av - 0.5 * delta_h, t_hot, t_cold};
  }

  void validate() const;  // g > 0, t_hot >= t_cold > 0, finite fields
};

enum class Regime { Engine, Accelerator, Refrigerator, Heater, Boundary };

std::string_view to_string(Regime regime);

// Per-site classification threshold, in units of g.
inline constexpr double kDefaultZeroTolerance = 1e-10;

// Sign convention: negative heat or work is an output of the working substance.
// Any |value| <= zero_tolerance, or a sign pattern outside the four machines
// (only reachable through rounding), gives Boundary.
Regime classify(double work, double q_hot, double q_cold, double zero_tolerance);

// Per-site energetics of a cycle.
struct CycleResult {
  double work = 0.0;
  double q_hot = 0.0;
  double q_cold = 0.0;
  Regime regime = Regime::Boundary;
  double zero_tolerance = 0.0;
};

struct Heats {
  double q_hot = 0.0;
  double q_cold = 0.0;
};

// W = dh (m(T_H) - m(T_C)) per site, first order in the stroke dh = h_H - h_C
// taken about the midpoint field h.
double infinitesimal_work(double g, double h, double t_hot, double t_cold, double delta_h);

// First-order heats of the same stroke. With u(T), m(T), m'(T) at field h and
// c = (dh/2) [T_H m'(T_H) - m(T_H) + T_C m'(T_C) - m(T_C)]:
//   Q_H = u(T_H) - u(T_C) + c + dh m(T_C)
//   Q_C = u(T_C) - u(T_H) - c - dh m(T_H)
// so Q_H + Q_C = -W exactly.
Heats first_order_heats(double g, double h, double t_hot, double t_cold, double delta_h);

CycleResult infinitesimal_cycle(double g, double h, double t_hot, double t_cold, double delta_h,
                                double zero_tolerance = kDefaultZeroTolerance);

// Finite stroke with per-mode Fermi occupations carried through the adiabats:
//   W   = <(omega_C - omega_H)(n_H - n_C)>
//   Q_H = <omega_H (n_H - n_C)>,  Q_C = <omega_C (n_C - n_H)>
// Thermodynamic limit unless `n_sites` selects the discrete antiperiodic modes.
CycleResult finite_cycle(const CycleSpec& spec, double zero_tolerance = kDefaultZeroTolerance,
                         std::optional<int> n_sites = std::nullopt);

// Two-level estimate valid deep in the gapped phase at low temperature.
Heats low_temperature_heats(const CycleSpec& spec);

struct FieldWindow {
  double low;
  double high;  // +infinity when t_hot == t_cold and delta_h > 0
};

// Range of h_hot with |h_H - g| > (T_H/T_C) |h_C - g|, h_C = h_H - delta_h:
// between g + dh T_H / (T_H + T_C) and g + dh T_H / (T_H - T_C).
FieldWindow refrigerator_window(double g, double delta_h, double t_hot, double t_cold);

struct CarnotPoint {
  double h_cold;
  double h_hot;
};

// h_C = g T_C / T_H and h_H = g T_H / T_C: omega_H(theta) / omega_C(theta) = T_H / T_C
// for every theta, so each mode keeps its occupation and W = Q_H = Q_C = 0.
CarnotPoint carnot_point(double g, double t_hot, double t_cold);

}  // namespace isingotto
