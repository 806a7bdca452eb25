#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "isingotto/boundaries.hpp"
#include "isingotto/cycle.hpp"
#include "isingotto/equilibrium.hpp"
#include "isingotto/errors.hpp"
#include "isingotto/oracle.hpp"
#include "isingotto/quadrature.hpp"
#include "isingotto/sweep.hpp"

namespace isingotto::cli {

namespace {

using isingotto::format_number;

// Small ordered JSON object writer; keeps key order and number formatting fixed.
class JsonObject {
 public:
  JsonObject& num(const std::string& key, double v) {
    add(key, std::isfinite(v) ? format_number(v) : "null");
    return *this;
  }
  JsonObject& integer(const std::string& key, long long v) {
    add(key, std::to_string(v));
    return *this;
  }
  JsonObject& str(const std::string& key, std::string_view v) {
    add(key, "\"" + std::string(v) + "\"");
    return *this;
  }
  JsonObject& raw(const std::string& key, const std::string& json) {
    add(key, json);
    return *this;
  }
  std::string text() const { return "{" + body_ + "}"; }

 private:
  void add(const std::string& key, const std::string& value) {
    if (!body_.empty()) body_ += ",";
    body_ += "\"" + key + "\":" + value;
  }
  std::string body_;
};

std::string cycle_json(const CycleResult& r) {
  return JsonObject()
      .num("work", r.work)
      .num("q_hot", r.q_hot)
      .num("q_cold", r.q_cold)
      .str("regime", to_string(r.regime))
      .num("zero_tolerance", r.zero_tolerance)
      .text();
}

std::string diff_json(const CycleResult& a, const CycleResult& b) {
  return JsonObject()
      .num("work", a.work - b.work)
      .num("q_hot", a.q_hot - b.q_hot)
      .num("q_cold", a.q_cold - b.q_cold)
      .text();
}

// Table output goes to --out when given, else to stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw IoError("cannot open " + path + " for writing");
      stream_ = &file_;
      path_ = path;
    }
  }
  std::ostream& get() { return *stream_; }
  void close() {
    stream_->flush();
    if (!*stream_) throw IoError("write failed" + (path_.empty() ? std::string() : " for " + path_));
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
  std::string path_;
};

struct Globals {
  int threads = 1;
  std::optional<double> quad_tol;
  bool seedless = false;
};

EquilibriumModel model_flag(const std::string& name) {
  try {
    return parse_equilibrium_model(name);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

void add_positive(CLI::Option* opt) { opt->check(CLI::PositiveNumber); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum Otto cycle on the transverse-field Ising chain: work, heat and regime maps.",
               "isingotto"};
  // "--h" is the transverse field, so help is only reachable as --help.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--threads", globals.threads, "Worker threads for sweeps and the oracle")
      ->check(CLI::Range(1, 1024));
  app.add_option("--quad-tol", globals.quad_tol, "Relative tolerance of every quadrature")
      ->check(CLI::Range(1e-15, 1e-2));
  app.add_flag("--seedless", globals.seedless,
               "Assert that no random numbers are drawn (the tool is fully deterministic)");

  // magnetization
  struct {
    double g = 1.0, h = 0.5, t_min = 0.05, t_max = 3.0;
    int steps = 100;
    std::string model = "exact", out;
  } mag;
  auto* c_mag = app.add_subcommand("magnetization", "m(T) curve for one equilibrium model (CSV t,m)");
  add_positive(c_mag->add_option("--g", mag.g, "Coupling g")->capture_default_str());
  c_mag->add_option("--h", mag.h, "Transverse field h")->required();
  c_mag->add_option("--model", mag.model, "exact | high-t | linear-h | third-order | boltzmann-modes | "
                                           "quasiparticle-dw | non-interacting")
      ->capture_default_str();
  add_positive(c_mag->add_option("--t-min", mag.t_min, "Lowest temperature")->required());
  add_positive(c_mag->add_option("--t-max", mag.t_max, "Highest temperature")->required());
  c_mag->add_option("--steps", mag.steps, "Number of temperatures")->required()->check(CLI::Range(2, 1000000));
  c_mag->add_option("--out", mag.out, "Output file (default stdout)");

  // cycle
  struct {
    double g = 1.0, h_hot = 0, h_cold = 0, t_hot = 1, t_cold = 1, tolerance = kDefaultZeroTolerance;
  } cyc;
  auto* c_cyc = app.add_subcommand("cycle", "One finite-stroke cycle in the thermodynamic limit (JSON)");
  add_positive(c_cyc->add_option("--g", cyc.g, "Coupling g")->capture_default_str());
  c_cyc->add_option("--h-hot", cyc.h_hot, "Field during the hot thermalisation")->required();
  c_cyc->add_option("--h-cold", cyc.h_cold, "Field during the cold thermalisation")->required();
  add_positive(c_cyc->add_option("--t-hot", cyc.t_hot, "Hot bath temperature")->required());
  add_positive(c_cyc->add_option("--t-cold", cyc.t_cold, "Cold bath temperature")->required());
  c_cyc->add_option("--tolerance", cyc.tolerance, "Zero tolerance for the regime label (per site)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  // sweep
  struct {
    std::string config, out, format = "csv";
  } swp;
  auto* c_swp = app.add_subcommand("sweep", "Regime map over (h, t_cold) from a JSON config");
  c_swp->add_option("--config", swp.config, "Sweep config file (JSON)")->required();
  c_swp->add_option("--out", swp.out, "Output file (default stdout)");
  c_swp->add_option("--format", swp.format, "csv | json-lines")->capture_default_str();

  // boundary
  struct {
    double g = 1.0, t_hot = 1.0, h_min = 0, h_max = 1;
    std::optional<double> delta_h;
    int steps = 2;
    std::string out;
  } bnd;
  auto* c_bnd = app.add_subcommand("boundary", "Engine/accelerator boundary t_cold(h) where W = 0 (CSV)");
  add_positive(c_bnd->add_option("--g", bnd.g, "Coupling g")->capture_default_str());
  add_positive(c_bnd->add_option("--t-hot", bnd.t_hot, "Hot bath temperature")->required());
  c_bnd->add_option("--delta-h", bnd.delta_h, "Finite stroke size (omit for the infinitesimal stroke)");
  c_bnd->add_option("--h-min", bnd.h_min, "Lowest midpoint field")->required();
  c_bnd->add_option("--h-max", bnd.h_max, "Highest midpoint field")->required();
  c_bnd->add_option("--steps", bnd.steps, "Number of fields")->required()->check(CLI::Range(1, 1000000));
  c_bnd->add_option("--out", bnd.out, "Output file (default stdout)");

  // carnot
  struct {
    double g = 1.0, t_hot = 1.0, t_cold = 1.0;
  } car;
  auto* c_car = app.add_subcommand("carnot", "Fields where every mode keeps its occupation (JSON)");
  add_positive(c_car->add_option("--g", car.g, "Coupling g")->capture_default_str());
  add_positive(c_car->add_option("--t-hot", car.t_hot, "Hot bath temperature")->required());
  add_positive(c_car->add_option("--t-cold", car.t_cold, "Cold bath temperature")->required());

  // landmarks
  struct {
    double g = 1.0;
    std::optional<double> h;
    std::string model = "exact";
  } lmk;
  auto* c_lmk = app.add_subcommand("landmarks", "Peak temperature of m(T) and where m(T) returns to m(0) (JSON)");
  add_positive(c_lmk->add_option("--g", lmk.g, "Coupling g")->capture_default_str());
  c_lmk->add_option("--h", lmk.h, "Transverse field (required except for linear-h)");
  c_lmk->add_option("--model", lmk.model, "Equilibrium model")->capture_default_str();

  // oracle-compare
  struct {
    int n = 8;
    double g = 1.0, h_hot = 0, h_cold = 0, t_hot = 1, t_cold = 1, tolerance = kDefaultZeroTolerance;
    std::string pairing = "continuity", cache_dir;
  } orc;
  auto* c_orc = app.add_subcommand("oracle-compare",
                                   "Thermodynamic limit vs discrete modes vs exact diagonalization (JSON)");
  c_orc->add_option("--n", orc.n, "Chain length (even, <= 12)")->required()->check(CLI::Range(2, kMaxOracleSites));
  add_positive(c_orc->add_option("--g", orc.g, "Coupling g")->capture_default_str());
  c_orc->add_option("--h-hot", orc.h_hot, "Field during the hot thermalisation")->required();
  c_orc->add_option("--h-cold", orc.h_cold, "Field during the cold thermalisation")->required();
  add_positive(c_orc->add_option("--t-hot", orc.t_hot, "Hot bath temperature")->required());
  add_positive(c_orc->add_option("--t-cold", orc.t_cold, "Cold bath temperature")->required());
  c_orc->add_option("--tolerance", orc.tolerance, "Zero tolerance for the regime label (per site)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  c_orc->add_option("--pairing", orc.pairing, "continuity | ascending-index")->capture_default_str();
  c_orc->add_option("--cache-dir", orc.cache_dir, "Directory for cached spectra (ascending-index only)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto selected = app.get_subcommands();
    err << (selected.empty() ? app.help() : selected.front()->help());
    return kUsageError;
  }

  try {
    if (globals.quad_tol) {
      auto q = quadrature_defaults();
      q.rel_tol = *globals.quad_tol;
      set_quadrature_defaults(q);
    }

    if (c_mag->parsed()) {
      const EquilibriumModel model = model_flag(mag.model);
      if (!(mag.t_min < mag.t_max)) throw ConfigError("--t-min must be below --t-max");
      Sink sink(mag.out, out);
      sink.get() << "t,m\n";
      for (int i = 0; i < mag.steps; ++i) {
        const double t = i + 1 == mag.steps ? mag.t_max : mag.t_min + (mag.t_max - mag.t_min) * i / (mag.steps - 1);
        const double m = magnetization({ModelParams::thermodynamic(mag.g, mag.h), t}, model);
        sink.get() << format_number(t) << ',' << format_number(m) << '\n';
      }
      sink.close();
    } else if (c_cyc->parsed()) {
      const CycleSpec spec{cyc.g, cyc.h_hot, cyc.h_cold, cyc.t_hot, cyc.t_cold};
      out << cycle_json(finite_cycle(spec, cyc.tolerance)) << "\n";
    } else if (c_swp->parsed()) {
      const TableFormat format = parse_table_format(swp.format);
      const SweepGrid grid = load_sweep_grid(swp.config);
      const auto table = run_sweep(grid, globals.threads);
      if (swp.out.empty()) {
        emit(table, format, out);
      } else {
        emit(table, format, std::filesystem::path(swp.out));
      }
      const auto failed = std::count_if(table.begin(), table.end(), [](const auto& r) { return r.failure.has_value(); });
      if (failed > 0) err << "warning: " << failed << " of " << table.size() << " points failed\n";
    } else if (c_bnd->parsed()) {
      if (bnd.h_max < bnd.h_min) throw ConfigError("--h-max must not be below --h-min");
      std::vector<double> fields(static_cast<std::size_t>(bnd.steps));
      for (int i = 0; i < bnd.steps; ++i) {
        fields[static_cast<std::size_t>(i)] =
            bnd.steps == 1 ? bnd.h_min : bnd.h_min + (bnd.h_max - bnd.h_min) * i / (bnd.steps - 1);
      }
      const StrokeMode mode = bnd.delta_h ? StrokeMode::finite(*bnd.delta_h) : StrokeMode::infinitesimal();
      const BoundaryCurve curve = w_zero_curve(bnd.g, bnd.t_hot, mode, fields, globals.threads);
      Sink sink(bnd.out, out);
      std::map<double, std::string> rows;
      for (const auto& p : curve.points) {
        rows[p.h] = format_number(p.t_cold) + ',' + format_number(p.residual) + ",ok";
      }
      for (double h : curve.no_root) rows[h] = "nan,nan,no_root";
      sink.get() << "h,t_cold,residual,status\n";
      for (const auto& [h, rest] : rows) sink.get() << format_number(h) << ',' << rest << '\n';
      sink.close();
    } else if (c_car->parsed()) {
      const CarnotPoint cp = carnot_point(car.g, car.t_hot, car.t_cold);
      const CycleResult r = finite_cycle({car.g, cp.h_hot, cp.h_cold, car.t_hot, car.t_cold});
      double ratio_residual = 0.0;
      for (int i = 0; i <= 256; ++i) {
        const double theta = std::numbers::pi * i / 256;
        const double a = omega(car.g, cp.h_hot, theta) / car.t_hot;
        const double b = omega(car.g, cp.h_cold, theta) / car.t_cold;
        ratio_residual = std::max(ratio_residual, std::abs(a - b) / std::max(a, b));
      }
      out << JsonObject()
                 .num("h_cold", cp.h_cold)
                 .num("h_hot", cp.h_hot)
                 .num("max_mode_ratio_residual", ratio_residual)
                 .raw("cycle", cycle_json(r))
                 .text()
          << "\n";
    } else if (c_lmk->parsed()) {
      const EquilibriumModel model = model_flag(lmk.model);
      if (!lmk.h && model != EquilibriumModel::LinearH) {
        err << "error: --h is required for model " << lmk.model << "\n" << c_lmk->help();
        return kUsageError;
      }
      // m(T) in the linear-response model is proportional to h, so the
      // landmarks do not depend on it.
      const double h = lmk.h.value_or(0.5 * lmk.g);
      JsonObject obj;
      obj.str("model", to_string(model)).num("g", lmk.g);
      if (lmk.h) obj.num("h", *lmk.h);
      obj.num("t_peak", magnetization_peak_temperature(lmk.g, h, model))
          .num("t_equal", equal_magnetization_temperature(lmk.g, h, model));
      out << obj.text() << "\n";
    } else if (c_orc->parsed()) {
      const CycleSpec spec{orc.g, orc.h_hot, orc.h_cold, orc.t_hot, orc.t_cold};
      BruteForceOptions options;
      options.threads = globals.threads;
      if (orc.pairing == "continuity") {
        options.pairing = AdiabaticPairing::Continuity;
      } else if (orc.pairing == "ascending-index") {
        options.pairing = AdiabaticPairing::AscendingIndex;
      } else {
        throw ConfigError("--pairing must be continuity or ascending-index");
      }
      if (orc.n % 2 != 0) throw ConfigError("--n must be even");
      const CycleResult tl = finite_cycle(spec, orc.tolerance);
      const CycleResult modes = discrete_mode_cycle(spec, orc.n, orc.tolerance);
      BruteForceReport ed;
      if (!orc.cache_dir.empty() && options.pairing == AdiabaticPairing::AscendingIndex) {
        DecompositionCache cache(orc.cache_dir);
        const auto hot = cache.get(ModelParams::finite(orc.g, orc.h_hot, orc.n), globals.threads);
        const auto cold = cache.get(ModelParams::finite(orc.g, orc.h_cold, orc.n), globals.threads);
        ed.result = ascending_pairing_cycle(hot, cold, spec, orc.tolerance);
      } else {
        ed = brute_force_cycle_report(spec, orc.n, orc.tolerance, options);
      }
      out << JsonObject()
                 .integer("n", orc.n)
                 .str("pairing", orc.pairing)
                 .raw("finite_cycle", cycle_json(tl))
                 .raw("discrete_mode_cycle", cycle_json(modes))
                 .raw("brute_force_cycle", cycle_json(ed.result))
                 .raw("brute_force_minus_finite", diff_json(ed.result, tl))
                 .raw("discrete_minus_finite", diff_json(modes, tl))
                 .raw("brute_force_minus_discrete", diff_json(ed.result, modes))
                 .integer("level_reorderings", ed.level_reorderings)
                 .num("min_overlap", ed.min_overlap)
                 .text()
          << "\n";
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace isingotto::cli
