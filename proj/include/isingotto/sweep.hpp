#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isingotto/cycle.hpp"

namespace isingotto {

struct SweepAxis {
  std::string name;  // x: "h" or "h_av" (both the stroke midpoint); y: "t_cold"
  double min = 0.0;
  double max = 1.0;
  int steps = 2;

  // steps evenly spaced values, both ends included.
  std::vector<double> values() const;
};

enum class StrokeKind { Infinitesimal, Finite };

// Regime map over (midpoint field, T_C). `delta_h` is the stroke size:
// the first-order prefactor for Infinitesimal, the actual h_H - h_C for Finite.
struct SweepGrid {
  SweepAxis x_axis{"h", 0.0, 2.0, 2};
  SweepAxis y_axis{"t_cold", 0.1, 1.0, 2};
  double g = 1.0;
  double t_hot = 1.0;
  double delta_h = 1e-4;
  StrokeKind mode = StrokeKind::Infinitesimal;
  double zero_tolerance = kDefaultZeroTolerance;

  void validate() const;  // throws DomainError
};

// JSON config:
//   {"x_axis": {"name": "h", "min": 0, "max": 2, "steps": 100},
//    "y_axis": {"name": "t_cold", "min": 0.005, "max": 0.5, "steps": 100},
//    "fixed": {"g": 1, "t_hot": 0.5, "delta_h": 1e-4},
//    "mode": "infinitesimal",
//    "zero_tolerance": 1e-10}            (optional)
// Unknown or missing keys throw ConfigError.
SweepGrid parse_sweep_grid(std::string_view json_text);
SweepGrid load_sweep_grid(const std::filesystem::path& path);

struct SweepRecord {
  double x = 0.0;
  double y = 0.0;
  double work = 0.0;
  double q_hot = 0.0;
  double q_cold = 0.0;
  // Regime label, or "failed" (with NaN energies) when the point threw.
  std::string regime;
  std::optional<std::string> failure;
};

// Row-major in (y, x): record i has y index i / x.steps and x index i % x.steps.
std::vector<SweepRecord> run_sweep(const SweepGrid& grid, int threads = 1);

enum class TableFormat { Csv, JsonLines };

TableFormat parse_table_format(std::string_view name);  // "csv" | "json-lines"

// CSV header x,y,work,q_hot,q_cold,regime; numbers with 12 significant digits.
void emit(const std::vector<SweepRecord>& table, TableFormat format, std::ostream& out);
void emit(const std::vector<SweepRecord>& table, TableFormat format,
          const std::filesystem::path& path);

// %.12g, with "nan"/"inf" spelled the same on every platform.
std::string format_number(double x);

}  // namespace isingotto
