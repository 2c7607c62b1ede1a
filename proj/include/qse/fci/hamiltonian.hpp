#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "qse/fci/wavefunction.hpp"
#include "qse/integrals/mo_integrals.hpp"

namespace qse::fci {

/// Matrix-free spin-orbital Hamiltonian built from spatial integrals.
class HamiltonianAction {
 public:
  explicit HamiltonianAction(const integrals::MolecularIntegrals& mo);

  int n_spin_orbitals() const { return n_; }
  double constant() const { return constant_; }

  double h1(int i, int j) const { return h1_[i * n_ + j]; }
  /// h_ijkl of a+_i a+_j a_k a_l.
  double h2(int i, int j, int k, int l) const { return h2_[((i * n_ + j) * n_ + k) * n_ + l]; }

  /// <D|H|D>, constant included.
  double diagonal(Determinant d) const;

  /// Calls f(d', <d'|H|d>) for every determinant connected to d, d itself
  /// first (diagonal element, constant included).
  void for_each_connected(Determinant d, const std::function<void(Determinant, double)>& f) const;

  Wavefunction apply(const Wavefunction& psi) const;

  Eigen::MatrixXd dense_matrix(const Sector& sector) const;
  /// y = H x over the sector basis.
  void apply(const Sector& sector, const Eigen::VectorXd& x, Eigen::VectorXd& y) const;

 private:
  int n_ = 0;
  double constant_ = 0.0;
  std::vector<double> h1_;
  std::vector<double> h2_;
};

}  // namespace qse::fci
