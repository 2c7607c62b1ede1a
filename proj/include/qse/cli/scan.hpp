#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qse/cli/scan_config.hpp"

namespace qse::cli {

/// One grid point. Disabled methods hold nullopt; failed ones hold NaN.
struct CurveRow {
  double r_angstrom = 0.0;
  std::optional<double> e_ref, e_vqse, e_oo, e_fci_full;
  std::vector<std::string> failures;  ///< "method: message"
  bool ok() const { return failures.empty(); }
};

struct ScanResult {
  std::vector<CurveRow> rows;
  nlohmann::json reports;  ///< per-point detail, grid order
  bool all_ok() const;
};

ScanResult run_scan(const ScanConfig& config, int threads = 1);

/// Header lines start with '#'. Empty cell = disabled, nan = failed.
/// Errors are against E_fci_full.
void write_csv(std::ostream& out, const std::vector<CurveRow>& rows);

/// Resolved config, per-point reports.
nlohmann::json sidecar(const ScanConfig& config, const ScanResult& result);

/// Writes <dir>/<stem>.csv and <dir>/<stem>.json.
void write_outputs(const ScanConfig& config, const ScanResult& result);

}  // namespace qse::cli
