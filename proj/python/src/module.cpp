#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "isingotto/boundaries.hpp"
#include "isingotto/cycle.hpp"
#include "isingotto/dispersion.hpp"
#include "isingotto/equilibrium.hpp"
#include "isingotto/errors.hpp"
#include "isingotto/oracle.hpp"
#include "isingotto/sweep.hpp"

namespace py = pybind11;
using namespace isingotto;

namespace {

ModelParams params(double g, double h, std::optional<int> n_sites) {
  ModelParams p{g, h, n_sites};
  p.validate();
  return p;
}

py::dict cycle_dict(const CycleResult& r) {
  py::dict d;
  d["work"] = r.work;
  d["q_hot"] = r.q_hot;
  d["q_cold"] = r.q_cold;
  d["regime"] = std::string(to_string(r.regime));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum Otto cycle on the transverse-field Ising chain";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<NoPeak>(m, "NoPeak", base.ptr());
  py::register_exception<BracketFailure>(m, "BracketFailure", base.ptr());
  py::register_exception<QuadratureFailure>(m, "QuadratureFailure", base.ptr());
  py::register_exception<DimensionCap>(m, "DimensionCap", base.ptr());

  m.def("omega", py::overload_cast<double, double, double>(&omega), py::arg("g"), py::arg("h"), py::arg("theta"));

  m.def(
      "free_energy",
      [](double g, double h, double t, std::optional<int> n) { return free_energy({params(g, h, n), t}); },
      py::arg("g"), py::arg("h"), py::arg("t"), py::arg("n_sites") = py::none());
  m.def(
      "internal_energy",
      [](double g, double h, double t, std::optional<int> n) { return internal_energy({params(g, h, n), t}); },
      py::arg("g"), py::arg("h"), py::arg("t"), py::arg("n_sites") = py::none());
  m.def(
      "entropy", [](double g, double h, double t, std::optional<int> n) { return entropy({params(g, h, n), t}); },
      py::arg("g"), py::arg("h"), py::arg("t"), py::arg("n_sites") = py::none());
  m.def(
      "magnetization",
      [](double g, double h, double t, const std::string& model, std::optional<int> n) {
        return magnetization({params(g, h, n), t}, parse_equilibrium_model(model));
      },
      py::arg("g"), py::arg("h"), py::arg("t"), py::arg("model") = "exact", py::arg("n_sites") = py::none());

  m.def(
      "finite_cycle",
      [](double g, double h_hot, double h_cold, double t_hot, double t_cold, double tol, std::optional<int> n) {
        return cycle_dict(finite_cycle({g, h_hot, h_cold, t_hot, t_cold}, tol, n));
      },
      py::arg("g"), py::arg("h_hot"), py::arg("h_cold"), py::arg("t_hot"), py::arg("t_cold"),
      py::arg("zero_tolerance") = kDefaultZeroTolerance, py::arg("n_sites") = py::none());
  m.def(
      "infinitesimal_cycle",
      [](double g, double h, double t_hot, double t_cold, double delta_h, double tol) {
        return cycle_dict(infinitesimal_cycle(g, h, t_hot, t_cold, delta_h, tol));
      },
      py::arg("g"), py::arg("h"), py::arg("t_hot"), py::arg("t_cold"), py::arg("delta_h"),
      py::arg("zero_tolerance") = kDefaultZeroTolerance);
  m.def(
      "brute_force_cycle",
      [](double g, double h_hot, double h_cold, double t_hot, double t_cold, int n, const std::string& pairing,
         int threads) {
        BruteForceOptions o;
        if (pairing == "continuity") {
          o.pairing = AdiabaticPairing::Continuity;
        } else if (pairing == "ascending-index") {
          o.pairing = AdiabaticPairing::AscendingIndex;
        } else {
          throw ConfigError("pairing must be continuity or ascending-index, got " + pairing);
        }
        o.threads = threads;
        CycleResult r;
        {
          py::gil_scoped_release unlocked;
          r = brute_force_cycle({g, h_hot, h_cold, t_hot, t_cold}, n, kDefaultZeroTolerance, o);
        }
        return cycle_dict(r);
      },
      py::arg("g"), py::arg("h_hot"), py::arg("h_cold"), py::arg("t_hot"), py::arg("t_cold"), py::arg("n_sites"),
      py::arg("pairing") = "continuity", py::arg("threads") = 1);

  m.def(
      "carnot_point",
      [](double g, double t_hot, double t_cold) {
        const auto c = carnot_point(g, t_hot, t_cold);
        return py::make_tuple(c.h_cold, c.h_hot);
      },
      py::arg("g"), py::arg("t_hot"), py::arg("t_cold"));
  m.def(
      "refrigerator_window",
      [](double g, double delta_h, double t_hot, double t_cold) {
        const auto w = refrigerator_window(g, delta_h, t_hot, t_cold);
        return py::make_tuple(w.low, w.high);
      },
      py::arg("g"), py::arg("delta_h"), py::arg("t_hot"), py::arg("t_cold"));

  m.def(
      "peak_temperature",
      [](double g, double h, const std::string& model) {
        return magnetization_peak_temperature(g, h, parse_equilibrium_model(model));
      },
      py::arg("g"), py::arg("h"), py::arg("model") = "exact");
  m.def(
      "equal_magnetization_temperature",
      [](double g, double h, const std::string& model) {
        return equal_magnetization_temperature(g, h, parse_equilibrium_model(model));
      },
      py::arg("g"), py::arg("h"), py::arg("model") = "exact");

  m.def(
      "w_zero_curve",
      [](double g, double t_hot, std::vector<double> fields, std::optional<double> delta_h, int threads) {
        const auto c = w_zero_curve(g, t_hot, StrokeMode{delta_h}, fields, threads);
        py::list points;
        for (const auto& p : c.points) points.append(py::make_tuple(p.h, p.t_cold));
        return py::make_tuple(points, c.no_root);
      },
      py::arg("g"), py::arg("t_hot"), py::arg("fields"), py::arg("delta_h") = py::none(), py::arg("threads") = 1);

  m.def(
      "sweep",
      [](const std::string& config_json, int threads) {
        const auto table = run_sweep(parse_sweep_grid(config_json), threads);
        py::list rows;
        for (const auto& r : table) {
          py::dict d;
          d["x"] = r.x;
          d["y"] = r.y;
          d["work"] = r.work;
          d["q_hot"] = r.q_hot;
          d["q_cold"] = r.q_cold;
          d["regime"] = r.regime;
          rows.append(d);
        }
        return rows;
      },
      py::arg("config_json"), py::arg("threads") = 1);
}
