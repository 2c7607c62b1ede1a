#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qse/integrals/basis.hpp"
#include "qse/integrals/geometry.hpp"

namespace qse::integrals {

/// Chemist-notation ERI tensor (pq|rs), dense, row-major in (p,q,r,s).
class EriTensor {
 public:
  EriTensor() = default;
  explicit EriTensor(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

  int dim() const { return n_; }
  std::size_t offset(int p, int q, int r, int s) const {
    return ((static_cast<std::size_t>(p) * n_ + q) * n_ + r) * n_ + s;
  }
  double operator()(int p, int q, int r, int s) const { return data_[offset(p, q, r, s)]; }
  double& operator()(int p, int q, int r, int s) { return data_[offset(p, q, r, s)]; }

  /// Writes v to all eight permutation-equivalent positions.
  void set_symmetric(int p, int q, int r, int s, double v);

  /// Largest violation of (pq|rs)=(qp|rs)=(pq|sr)=(rs|pq).
  double symmetry_violation() const;

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

 private:
  int n_ = 0;
  std::vector<double> data_;
};

struct AoIntegrals {
  Eigen::MatrixXd overlap;
  Eigen::MatrixXd kinetic;
  Eigen::MatrixXd nuclear;  ///< electron-nucleus attraction
  EriTensor eri;
  double e_nuc = 0.0;

  int n_basis() const { return static_cast<int>(overlap.rows()); }
  Eigen::MatrixXd core_hamiltonian() const { return kinetic + nuclear; }
};

/// Overlap, kinetic, nuclear-attraction and electron-repulsion integrals over
/// the Cartesian basis, in hartree/bohr atomic units.
AoIntegrals compute_ao_integrals(const Geometry& geometry, const BasisSet& basis);

AoIntegrals compute_ao_integrals(const Geometry& geometry, const std::vector<BasisFunction>& functions);

}  // namespace qse::integrals
