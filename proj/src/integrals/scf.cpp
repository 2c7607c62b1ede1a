#include "qse/integrals/scf.hpp"

#include <cmath>
#include <string>

#include "qse/errors.hpp"

namespace qse::integrals {

Eigen::MatrixXd symmetric_orthogonalizer(const Eigen::MatrixXd& overlap) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(overlap);
  if (es.info() != Eigen::Success) throw DomainError("overlap diagonalization failed");
  if (es.eigenvalues().minCoeff() <= 1e-12) throw DomainError("overlap matrix is not positive definite");
  return es.eigenvectors() * es.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
}

void canonicalize_orbitals(const Eigen::MatrixXd& overlap, const Eigen::VectorXd& energies,
                           Eigen::MatrixXd& coefficients, double degeneracy_tol) {
  const int n = static_cast<int>(coefficients.rows());
  const int m = static_cast<int>(coefficients.cols());
  int start = 0;
  while (start < m) {
    int end = start + 1;
    while (end < m && std::abs(energies(end) - energies(start)) < degeneracy_tol) ++end;
    const int d = end - start;
    if (d > 1) {
      const Eigen::MatrixXd block = coefficients.middleCols(start, d);
      // Row k of proj holds the components of AO function k inside the block.
      const Eigen::MatrixXd proj = overlap * block;
      Eigen::MatrixXd basis(d, d);
      int found = 0;
      for (int k = 0; k < n && found < d; ++k) {
        Eigen::VectorXd w = proj.row(k).transpose();
        for (int j = 0; j < found; ++j) w -= basis.col(j).dot(w) * basis.col(j);
        const double norm = w.norm();
        if (norm > 1e-6) basis.col(found++) = w / norm;
      }
      if (found == d) coefficients.middleCols(start, d) = block * basis;
    }
    start = end;
  }
  for (int j = 0; j < m; ++j) {
    const double big = coefficients.col(j).cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i) {
      if (std::abs(coefficients(i, j)) >= big - 1e-8) {
        if (coefficients(i, j) < 0) coefficients.col(j) *= -1.0;
        break;
      }
    }
  }
}

namespace {

Eigen::MatrixXd fock_matrix(const AoIntegrals& ao, const Eigen::MatrixXd& hcore, const Eigen::MatrixXd& density) {
  const int n = ao.n_basis();
  Eigen::MatrixXd f = hcore;
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = 0; nu < n; ++nu) {
      double g = 0.0;
      for (int la = 0; la < n; ++la)
        for (int si = 0; si < n; ++si) {
          g += density(la, si) * (2.0 * ao.eri(mu, nu, la, si) - ao.eri(mu, la, nu, si));
        }
      f(mu, nu) += g;
    }
  }
  return f;
}

}  // namespace

ScfResult run_rhf(const AoIntegrals& ao, int n_electrons, const ScfOptions& options) {
  const int n = ao.n_basis();
  if (n_electrons < 0 || n_electrons % 2 != 0) throw DomainError("run_rhf needs an even, non-negative electron count");
  if (n_electrons > 2 * n) throw DomainError("run_rhf: more electrons than the basis can hold");
  const int n_occ = n_electrons / 2;

  const Eigen::MatrixXd& s = ao.overlap;
  const Eigen::MatrixXd x = symmetric_orthogonalizer(s);
  const Eigen::MatrixXd hcore = ao.core_hamiltonian();

  auto diagonalize = [&](const Eigen::MatrixXd& f, Eigen::VectorXd& eps) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(x.transpose() * f * x);
    eps = es.eigenvalues();
    return Eigen::MatrixXd(x * es.eigenvectors());
  };

  ScfResult result;
  Eigen::VectorXd eps;
  Eigen::MatrixXd c = diagonalize(hcore, eps);
  Eigen::MatrixXd density = c.leftCols(n_occ) * c.leftCols(n_occ).transpose();
  double energy = 0.0;
  for (int it = 1; it <= options.max_iter; ++it) {
    const Eigen::MatrixXd f = fock_matrix(ao, hcore, density);
    energy = (density.cwiseProduct(hcore + f)).sum() + ao.e_nuc;
    const Eigen::MatrixXd comm = f * density * s - s * density * f;
    const double err = n > 0 ? comm.cwiseAbs().maxCoeff() : 0.0;
    result.iterations = it;
    result.commutator_norm = err;
    if (err < options.threshold) {
      result.converged = true;
      c = diagonalize(f, eps);
      break;
    }
    c = diagonalize(f, eps);
    Eigen::MatrixXd next = c.leftCols(n_occ) * c.leftCols(n_occ).transpose();
    if (it <= options.damping_iterations) next = options.damping * density + (1.0 - options.damping) * next;
    density = next;
  }
  if (!result.converged) {
    throw ConvergenceError("RHF did not converge in " + std::to_string(options.max_iter) + " iterations", energy);
  }
  canonicalize_orbitals(s, eps, c);
  result.mo_coefficients = c;
  result.orbital_energies = eps;
  result.scf_energy = energy;
  return result;
}

}  // namespace qse::integrals
