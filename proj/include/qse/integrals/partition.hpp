#pragma once

#include <optional>
#include <vector>

namespace qse::integrals {

enum class Space { Core, Active, Virtual, None };

/// Spatial-orbital index sets. Orbitals listed in no set are dropped
/// (deleted virtuals).
struct OrbitalPartition {
  std::vector<int> core;
  std::vector<int> active;
  std::vector<int> virtuals;
  /// Subset of `active` that is excited into the virtuals; nullopt = all.
  std::optional<std::vector<int>> active_excited;

  /// Throws PartitionError on overlap, duplicates or indices outside
  /// [0, n_spatial).
  void validate(int n_spatial) const;

  Space space_of(int spatial) const;

  /// Consecutive blocks: [0, n_core) core, then n_active active, then
  /// n_virtual virtuals (n_virtual < 0 takes every remaining orbital).
  static OrbitalPartition from_counts(int n_core, int n_active, int n_virtual, int n_spatial);
};

/// Spin-orbital view of a partition. Spatial orbital p maps to spin orbitals
/// 2p (alpha) and 2p+1 (beta).
struct SpinPartition {
  int n_spin_orbitals = 0;
  std::vector<int> core;
  std::vector<int> active;
  std::vector<int> virtuals;
  std::vector<int> active_excited;
  std::vector<Space> label;        ///< per spin orbital
  std::vector<int> active_local;   ///< spin orbital -> position in `active`, or -1

  static SpinPartition from(const OrbitalPartition& partition, int n_spatial);

  int n_active() const { return static_cast<int>(active.size()); }
  int n_virtual() const { return static_cast<int>(virtuals.size()); }
};

inline int alpha_of(int spatial) { return 2 * spatial; }
inline int beta_of(int spatial) { return 2 * spatial + 1; }
inline int spatial_of(int spin_orbital) { return spin_orbital / 2; }
inline int spin_of(int spin_orbital) { return spin_orbital % 2; }

}  // namespace qse::integrals
