#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qse/integrals/partition.hpp"

namespace qse::cli {

enum class OoMode { None, Sweep, Joint, Iterate };

/// Either block counts (core, active, virtual; virtual < 0 = all remaining)
/// or explicit spatial index lists.
struct PartitionSpec {
  bool use_counts = true;
  int n_core = 0;
  int n_active = 2;
  int n_virtual = -1;
  std::vector<int> core, active, virtuals;

  integrals::OrbitalPartition resolve(int n_spatial) const;
};

struct MethodFlags {
  bool vqse = true;
  int cumulant_rank = 0;  ///< 0 = exact 3-/4-RDMs
  std::optional<std::vector<int>> excited_active;
  OoMode oo = OoMode::None;
  int oo_cycles = 1;
  bool local_angles = false;  ///< angle_search "local" instead of "global"
  std::optional<double> shots;
  std::uint64_t seed = 0;
  double epsilon = 1e-8;
  bool full_fci = true;
};

struct OutputSpec {
  std::string directory = ".";
  std::string stem = "scan";
  bool matrices = false;  ///< embed H and S in the sidecar
};

/// Diatomic bond-length scan.
struct ScanConfig {
  std::string atom_a = "H";
  std::string atom_b = "H";
  int charge = 0;
  std::vector<double> points;  ///< angstrom
  std::string basis = "sto-3g";
  PartitionSpec partition;
  MethodFlags methods;
  OutputSpec output;

  /// Throws ConfigError on unknown keys, bad types or a non-increasing grid.
  static ScanConfig from_json(const nlohmann::json& j);
  static ScanConfig load(const std::filesystem::path& path);
  nlohmann::json to_json() const;
  void validate() const;
};

std::string to_string(OoMode mode);

}  // namespace qse::cli
