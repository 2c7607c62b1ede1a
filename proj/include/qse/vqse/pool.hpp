#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qse/fci/determinant.hpp"
#include "qse/integrals/partition.hpp"

namespace qse::vqse {

enum class OpKind { Identity, Single, Double };

/// Identity, a+_i a_p, or a+_mu a_q a+_nu a_r (spin-orbital indices).
struct ExpansionOperator {
  OpKind kind = OpKind::Identity;
  int i = -1, p = -1;                  ///< single
  int mu = -1, q = -1, nu = -1, r = -1;  ///< double, mu < nu

  static ExpansionOperator identity() { return {}; }
  static ExpansionOperator single(int i, int p) { return {OpKind::Single, i, p, -1, -1, -1, -1}; }
  static ExpansionOperator double_(int mu, int q, int nu, int r) { return {OpKind::Double, -1, -1, mu, q, nu, r}; }

  /// Ladder string in the written order.
  fci::OperatorString ops() const;
  /// Twice the change of S_z.
  int delta_sz2() const;
  std::string to_string() const;

  bool operator==(const ExpansionOperator&) const = default;
};

struct PoolOptions {
  bool include_identity = true;  ///< forced on by the pipeline
  bool singles = true;
  bool doubles = true;
  /// Active spin orbitals that may be excited; nullopt = the partition's
  /// excited-active set (all active by default).
  std::optional<std::vector<int>> restrict_to;
};

/// Identity, then singles ordered by (i, p), then doubles by (mu, nu, q, r).
/// Singles: i in A_v u V, p in A_v. Doubles: mu < nu in V, ordered (q, r) in
/// A_v x A_v. No spin pruning. Throws DomainError for an empty active space
/// or a restriction outside it.
std::vector<ExpansionOperator> build_pool(const integrals::SpinPartition& partition, const PoolOptions& options = {});

/// Drops operators that change S_z.
std::vector<ExpansionOperator> prune_spin_violating(const std::vector<ExpansionOperator>& pool);

}  // namespace qse::vqse
