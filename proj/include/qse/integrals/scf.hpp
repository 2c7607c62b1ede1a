#pragma once

#include <Eigen/Dense>

#include "qse/integrals/ao_integrals.hpp"

namespace qse::integrals {

struct ScfOptions {
  int max_iter = 200;
  double threshold = 1e-9;     ///< on max |F P S - S P F|
  int damping_iterations = 5;  ///< density mixing applied to the first iterations
  double damping = 0.5;
};

struct ScfResult {
  Eigen::MatrixXd mo_coefficients;  ///< AO -> MO, columns orthonormal under S
  Eigen::VectorXd orbital_energies;
  double scf_energy = 0.0;
  bool converged = false;
  int iterations = 0;
  double commutator_norm = 0.0;
};

/// Closed-shell Hartree-Fock by damped fixed-point iteration.
///
/// MOs come out in ascending orbital energy. Within a degenerate block the
/// orbitals are re-chosen by projecting the AO functions onto the block in
/// ascending AO index, and every MO is signed so that its first
/// largest-magnitude coefficient is positive; the result depends only on the
/// Fock operator, not on eigensolver arbitrariness.
///
/// Throws DomainError for odd or oversized electron counts and
/// ConvergenceError (carrying the last energy) after max_iter iterations.
ScfResult run_rhf(const AoIntegrals& ao, int n_electrons, const ScfOptions& options = {});

/// Symmetric orthogonalizer S^{-1/2}. Throws DomainError unless S is
/// positive definite.
Eigen::MatrixXd symmetric_orthogonalizer(const Eigen::MatrixXd& overlap);

/// Applies the degenerate-block and sign conventions described above to a
/// set of S-orthonormal eigenvectors sorted by eigenvalue.
void canonicalize_orbitals(const Eigen::MatrixXd& overlap, const Eigen::VectorXd& energies,
                           Eigen::MatrixXd& coefficients, double degeneracy_tol = 1e-8);

}  // namespace qse::integrals
