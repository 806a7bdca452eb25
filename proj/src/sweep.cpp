#include "isingotto/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "isingotto/errors.hpp"
#include "isingotto/parallel.hpp"

namespace isingotto {

namespace {

using nlohmann::json;

void require_keys(const json& obj, std::string_view where, std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional = {}) {
  if (!obj.is_object()) throw ConfigError(std::string(where) + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto k : required) known = known || key == k;
    for (auto k : optional) known = known || key == k;
    if (!known) throw ConfigError("unknown key \"" + key + "\" in " + std::string(where));
  }
  for (auto k : required) {
    if (!obj.contains(std::string(k))) {
      throw ConfigError("missing key \"" + std::string(k) + "\" in " + std::string(where));
    }
  }
}

double number_at(const json& obj, const std::string& key, std::string_view where) {
  const auto& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(std::string(where) + "." + key + " must be a number");
  return v.get<double>();
}

SweepAxis parse_axis(const json& obj, std::string_view where) {
  require_keys(obj, where, {"name", "min", "max", "steps"});
  SweepAxis axis;
  if (!obj.at("name").is_string()) throw ConfigError(std::string(where) + ".name must be a string");
  axis.name = obj.at("name").get<std::string>();
  axis.min = number_at(obj, "min", where);
  axis.max = number_at(obj, "max", where);
  if (!obj.at("steps").is_number_integer()) {
    throw ConfigError(std::string(where) + ".steps must be an integer");
  }
  axis.steps = obj.at("steps").get<int>();
  return axis;
}

void check_axis(const SweepAxis& axis, std::string_view where) {
  if (axis.steps < 2) throw ConfigError(std::string(where) + ": steps must be >= 2");
  if (!std::isfinite(axis.min) || !std::isfinite(axis.max) || !(axis.min < axis.max)) {
    throw ConfigError(std::string(where) + ": need finite min < max");
  }
}

std::string_view regime_label(Regime r) { return to_string(r); }

}  // namespace

std::vector<double> SweepAxis::values() const {
  std::vector<double> v(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    v[static_cast<std::size_t>(i)] = min + (max - min) * i / (steps - 1);
  }
  v.back() = max;
  return v;
}

void SweepGrid::validate() const {
  if (x_axis.name != "h" && x_axis.name != "h_av") {
    throw ConfigError("x_axis.name must be \"h\" or \"h_av\", got \"" + x_axis.name + "\"");
  }
  if (y_axis.name != "t_cold") throw ConfigError("y_axis.name must be \"t_cold\", got \"" + y_axis.name + "\"");
  check_axis(x_axis, "x_axis");
  check_axis(y_axis, "y_axis");
  if (!(g > 0.0) || !std::isfinite(g)) throw ConfigError("fixed.g must be positive");
  if (!(t_hot > 0.0) || !std::isfinite(t_hot)) throw ConfigError("fixed.t_hot must be positive");
  if (!std::isfinite(delta_h) || delta_h == 0.0) throw ConfigError("fixed.delta_h must be finite and nonzero");
  if (!(zero_tolerance >= 0.0)) throw ConfigError("zero_tolerance must be >= 0");
}

SweepGrid parse_sweep_grid(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("sweep config is not valid JSON: ") + e.what());
  }
  require_keys(doc, "config", {"x_axis", "y_axis", "fixed", "mode"}, {"zero_tolerance"});
  SweepGrid grid;
  grid.x_axis = parse_axis(doc.at("x_axis"), "x_axis");
  grid.y_axis = parse_axis(doc.at("y_axis"), "y_axis");
  const auto& fixed = doc.at("fixed");
  require_keys(fixed, "fixed", {"g", "t_hot", "delta_h"});
  grid.g = number_at(fixed, "g", "fixed");
  grid.t_hot = number_at(fixed, "t_hot", "fixed");
  grid.delta_h = number_at(fixed, "delta_h", "fixed");
  const auto& mode = doc.at("mode");
  if (mode == "infinitesimal") {
    grid.mode = StrokeKind::Infinitesimal;
  } else if (mode == "finite") {
    grid.mode = StrokeKind::Finite;
  } else {
    throw ConfigError("mode must be \"infinitesimal\" or \"finite\"");
  }
  if (doc.contains("zero_tolerance")) grid.zero_tolerance = number_at(doc, "zero_tolerance", "config");
  grid.validate();
  return grid;
}

SweepGrid load_sweep_grid(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read sweep config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_sweep_grid(text.str());
}

std::vector<SweepRecord> run_sweep(const SweepGrid& grid, int threads) {
  grid.validate();
  const auto xs = grid.x_axis.values();
  const auto ys = grid.y_axis.values();
  std::vector<SweepRecord> table(xs.size() * ys.size());
  parallel_for(table.size(), threads, [&](std::size_t i) {
    SweepRecord& rec = table[i];
    rec.x = xs[i % xs.size()];
    rec.y = ys[i / xs.size()];
    try {
      const CycleResult r =
          grid.mode == StrokeKind::Infinitesimal
              ? infinitesimal_cycle(grid.g, rec.x, grid.t_hot, rec.y, grid.delta_h, grid.zero_tolerance)
              : finite_cycle(CycleSpec::centered(grid.g, rec.x, grid.delta_h, grid.t_hot, rec.y),
                             grid.zero_tolerance);
      rec.work = r.work;
      rec.q_hot = r.q_hot;
      rec.q_cold = r.q_cold;
      rec.regime = std::string(regime_label(r.regime));
    } catch (const std::exception& e) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      rec.work = rec.q_hot = rec.q_cold = nan;
      rec.regime = "failed";
      rec.failure = e.what();
    }
  });
  return table;
}

TableFormat parse_table_format(std::string_view name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "json-lines") return TableFormat::JsonLines;
  throw ConfigError("unknown table format \"" + std::string(name) + "\" (csv | json-lines)");
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void emit(const std::vector<SweepRecord>& table, TableFormat format, std::ostream& out) {
  if (format == TableFormat::Csv) {
    out << "x,y,work,q_hot,q_cold,regime\n";
    for (const auto& r : table) {
      out << format_number(r.x) << ',' << format_number(r.y) << ',' << format_number(r.work) << ','
          << format_number(r.q_hot) << ',' << format_number(r.q_cold) << ',' << r.regime << '\n';
    }
    return;
  }
  // JSON has no NaN; failed points carry null energies.
  auto num = [](double x) { return std::isfinite(x) ? format_number(x) : std::string("null"); };
  for (const auto& r : table) {
    out << "{\"x\":" << num(r.x) << ",\"y\":" << num(r.y) << ",\"work\":" << num(r.work)
        << ",\"q_hot\":" << num(r.q_hot) << ",\"q_cold\":" << num(r.q_cold) << ",\"regime\":\""
        << r.regime << "\"}\n";
  }
}

void emit(const std::vector<SweepRecord>& table, TableFormat format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  emit(table, format, out);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace isingotto
