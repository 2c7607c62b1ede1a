#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qse/integrals/partition.hpp"

namespace qse::oo {

/// Spatial-orbital pair rotated by one Givens angle.
struct OrbitalPair {
  int p = 0;
  int q = 0;
  bool operator==(const OrbitalPair&) const = default;
};

/// G_pp = G_qq = cos t, G_pq = -sin t, G_qp = sin t.
Eigen::MatrixXd givens_matrix(int n, OrbitalPair pair, double theta);

/// Maps an angle into (-pi, pi].
double wrap_angle(double theta);

/// Orbital rotation as an ordered product of Givens factors on top of a base
/// unitary: U = base * G(pairs[0], angles[0]) * G(pairs[1], angles[1]) * ...
/// New orbitals are phi'_p = sum_q phi_q U_qp.
struct RotationParameters {
  int n_spatial = 0;
  Eigen::MatrixXd base;  ///< empty means identity
  std::vector<OrbitalPair> pairs;
  std::vector<double> angles;

  static RotationParameters identity(int n_spatial);
  Eigen::MatrixXd unitary() const;
  void append(OrbitalPair pair, double theta);
};

/// exp(t) for a real antisymmetric generator t (t_pq = -t_qp to 1e-12).
/// Throws DomainError otherwise.
Eigen::MatrixXd unitary_from_generator(const Eigen::MatrixXd& t);

/// Non-redundant pairs: active ascending, then core followed by virtual
/// partners ascending. Active-active pairs (p < q) follow when requested.
std::vector<OrbitalPair> rotation_pairs(const integrals::OrbitalPartition& partition, bool include_active_active = false);

/// ||U^T U - I|| (max abs).
double unitarity_violation(const Eigen::MatrixXd& u);

}  // namespace qse::oo
