#include "qse/fci/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qse/errors.hpp"

namespace qse::fci {
namespace {

struct Eigenpairs {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

// Block Davidson for the k lowest roots with a diagonal preconditioner.
Eigenpairs davidson(const HamiltonianAction& h, const Sector& sector, int k, const GroundStateOptions& opt) {
  const auto dim = static_cast<Eigen::Index>(sector.size());
  Eigen::VectorXd diag(dim);
  for (Eigen::Index i = 0; i < dim; ++i) diag(i) = h.diagonal(sector[i]);

  // Guesses: unit vectors on the lowest diagonal elements.
  std::vector<Eigen::Index> order(dim);
  for (Eigen::Index i = 0; i < dim; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return diag(a) < diag(b); });
  const int max_sub = std::max(8 * k, 40);
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(dim, k);
  for (int j = 0; j < k; ++j) v(order[j], j) = 1.0;
  Eigen::MatrixXd hv(dim, 0);

  Eigen::VectorXd theta;
  Eigen::MatrixXd ritz;
  double last = 0.0;
  for (int it = 0; it < opt.max_iter; ++it) {
    const Eigen::Index old = hv.cols();
    hv.conservativeResize(dim, v.cols());
    for (Eigen::Index c = old; c < v.cols(); ++c) {
      Eigen::VectorXd y;
      h.apply(sector, v.col(c), y);
      hv.col(c) = y;
    }
    const Eigen::MatrixXd sub = v.transpose() * hv;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (sub + sub.transpose()));
    theta = es.eigenvalues().head(k);
    const Eigen::MatrixXd y = es.eigenvectors().leftCols(k);
    ritz = v * y;
    const Eigen::MatrixXd hritz = hv * y;
    last = theta(0);

    std::vector<Eigen::VectorXd> fresh;
    double worst = 0.0;
    for (int j = 0; j < k; ++j) {
      Eigen::VectorXd r = hritz.col(j) - theta(j) * ritz.col(j);
      const double rn = r.norm();
      worst = std::max(worst, rn);
      if (rn < opt.residual_tol) continue;
      for (Eigen::Index i = 0; i < dim; ++i) {
        const double den = diag(i) - theta(j);
        r(i) /= std::abs(den) > 1e-8 ? den : 1e-8;
      }
      fresh.push_back(r);
    }
    if (worst < opt.residual_tol) return {theta, ritz};

    if (v.cols() + static_cast<Eigen::Index>(fresh.size()) > max_sub) {
      v = ritz;
      Eigen::MatrixXd tmp = hritz;
      hv = tmp;
    }
    for (auto& r : fresh) {
      for (int pass = 0; pass < 2; ++pass) r -= v * (v.transpose() * r);
      const double nrm = r.norm();
      if (nrm < 1e-12) continue;
      v.conservativeResize(dim, v.cols() + 1);
      v.col(v.cols() - 1) = r / nrm;
    }
  }
  throw ConvergenceError("Davidson did not converge", last);
}

}  // namespace

GroundState ground_state(const HamiltonianAction& h, int n_electrons, const GroundStateOptions& options) {
  const Sector sector(h.n_spin_orbitals(), n_electrons, options.sz2);
  if (sector.size() == 0) throw DomainError("empty sector");
  const auto dim = static_cast<Eigen::Index>(sector.size());
  const int k = dim >= 2 ? 2 : 1;

  Eigenpairs ep;
  if (sector.size() <= options.dense_limit) {
    const Eigen::MatrixXd hm = h.dense_matrix(sector);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (hm + hm.transpose()));
    if (es.info() != Eigen::Success) throw ConvergenceError("dense diagonalization failed", 0.0);
    ep.values = es.eigenvalues().head(k);
    ep.vectors = es.eigenvectors().leftCols(k);
  } else {
    ep = davidson(h, sector, k, options);
  }

  GroundState gs;
  gs.sector_size = sector.size();
  gs.energy = ep.values(0);
  gs.gap = k > 1 ? ep.values(1) - ep.values(0) : std::numeric_limits<double>::infinity();
  gs.degenerate = gs.gap < options.degeneracy_tol;

  Eigen::VectorXd c = ep.vectors.col(0);
  c.normalize();
  const double big = c.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (std::abs(c(i)) >= big * (1.0 - 1e-10)) {
      if (c(i) < 0) c = -c;
      break;
    }
  }
  Eigen::VectorXd hc;
  h.apply(sector, c, hc);
  gs.residual = (hc - gs.energy * c).norm();

  gs.wavefunction = Wavefunction(h.n_spin_orbitals(), n_electrons);
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (c(i) != 0.0) gs.wavefunction.set(sector[i], c(i));
  }
  return gs;
}

}  // namespace qse::fci
