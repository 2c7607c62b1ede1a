#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "qse/integrals/ao_integrals.hpp"
#include "qse/integrals/partition.hpp"

namespace qse::integrals {

/// One- and two-electron integrals over spatial orbitals.
///
/// The spin-orbital Hamiltonian is
///   H = sum_ij h_ij a+_i a_j + 1/2 sum_ijkl h_ijkl a+_i a+_j a_k a_l + constant
/// with h_ij = delta(s_i, s_j) h1(i/2, j/2) and
///      h_ijkl = delta(s_i, s_l) delta(s_j, s_k) (i/2 l/2 | j/2 k/2),
/// where spin orbital 2p is alpha and 2p+1 is beta.
struct MolecularIntegrals {
  int n_spatial = 0;
  double e_nuc = 0.0;
  Eigen::MatrixXd h1;
  EriTensor eri;
  double core_energy_shift = 0.0;  ///< electronic energy of frozen core orbitals

  double constant_energy() const { return e_nuc + core_energy_shift; }
  int n_spin_orbitals() const { return 2 * n_spatial; }

  /// Throws ShapeError on inconsistent sizes and DomainError when h1 or eri
  /// violate their permutational symmetry by more than tol.
  void validate(double tol = 1e-12) const;

  double one_body(int i, int j) const {
    return (i % 2 == j % 2) ? h1(i / 2, j / 2) : 0.0;
  }
  double two_body(int i, int j, int k, int l) const {
    return (i % 2 == l % 2 && j % 2 == k % 2) ? eri(i / 2, l / 2, j / 2, k / 2) : 0.0;
  }

  /// Integrals restricted to the listed spatial orbitals, in that order.
  /// No mean-field dressing; constants are carried over unchanged.
  MolecularIntegrals restricted_to(std::span<const int> orbitals) const;
};

/// (pq|rs) over the columns of coeffs, via four quarter transformations.
EriTensor transform_eri(const EriTensor& eri, const Eigen::MatrixXd& coeffs);

/// AO -> MO transformation with a square, full-rank coefficient matrix.
MolecularIntegrals transform_to_mo(const AoIntegrals& ao, const Eigen::MatrixXd& coeffs);

/// Integrals in the rotated orbitals phi'_p = sum_q phi_q U_qp.
MolecularIntegrals rotate_orbitals(const MolecularIntegrals& mo, const Eigen::MatrixXd& rotation);

/// Mean-field dressed integrals over active+virtual orbitals.
struct DressedIntegrals {
  /// Over orbitals `kept` (active first, then virtuals, each in partition
  /// order). e_nuc is carried over; core_energy_shift holds the frozen-core
  /// electronic energy, so constant_energy() is the total scalar term.
  MolecularIntegrals integrals;
  /// Partition re-expressed in the new indexing (no core).
  OrbitalPartition partition;
  /// New index -> original spatial index.
  std::vector<int> kept;
};

/// Folds doubly occupied core orbitals into an effective one-body term and a
/// scalar, such that for every active-space state
///   <core (x) Psi|H|core (x) Psi> = constant + <Psi|H_dressed|Psi>.
DressedIntegrals dress_core(const MolecularIntegrals& mo, const OrbitalPartition& partition);

}  // namespace qse::integrals
