#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace qse::cli {

/// Scan CSV: column names from the last '#' header line, cells kept as text.
struct CurveTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  static CurveTable read(std::istream& in);
  static CurveTable read(const std::filesystem::path& path);
  int column(const std::string& name) const;  ///< -1 if absent
};

struct ColumnDiff {
  std::string column;
  double max_abs = 0.0;
  double mean_abs = 0.0;
  int compared = 0;
};

struct CellMismatch {
  std::string column;
  double r_angstrom = 0.0;
  std::string a, b;
};

struct DiffReport {
  std::vector<ColumnDiff> columns;
  std::vector<CellMismatch> exceeded;  ///< beyond tolerance, or missing/nan on one side only
};

/// Compares every numeric column of a that b also has. Throws ConfigError
/// when the R grids differ.
DiffReport diff_curves(const CurveTable& a, const CurveTable& b, double tolerance);

void print_report(std::ostream& out, const DiffReport& report, double tolerance);

}  // namespace qse::cli
