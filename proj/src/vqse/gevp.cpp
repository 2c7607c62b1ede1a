#include "qse/vqse/gevp.hpp"

#include <numeric>
#include <vector>

#include "qse/errors.hpp"

namespace qse::vqse {

Orthogonalizer canonical_orthogonalize(const Eigen::MatrixXcd& S, double epsilon) {
  if (S.rows() != S.cols()) throw ShapeError("metric must be square");
  if (S.rows() == 0) throw DegenerateMetricError("empty metric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(S);
  if (es.info() != Eigen::Success) throw DegenerateMetricError("metric diagonalization failed");
  const Eigen::VectorXd& lam = es.eigenvalues();
  const double lmax = lam.maxCoeff();
  if (!(lmax > 0.0)) throw DegenerateMetricError("metric has no positive eigenvalue");
  std::vector<Eigen::Index> keep, drop;
  for (Eigen::Index k = 0; k < lam.size(); ++k) (lam(k) > epsilon * lmax ? keep : drop).push_back(k);
  if (keep.empty()) throw DegenerateMetricError("every metric eigenvalue is below the threshold");
  Orthogonalizer o;
  o.X.resize(S.rows(), static_cast<Eigen::Index>(keep.size()));
  o.kept_eigenvalues.resize(static_cast<Eigen::Index>(keep.size()));
  o.discarded_eigenvalues.resize(static_cast<Eigen::Index>(drop.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    const auto k = keep[c];
    o.X.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(k) / std::sqrt(lam(k));
    o.kept_eigenvalues(static_cast<Eigen::Index>(c)) = lam(k);
  }
  for (std::size_t c = 0; c < drop.size(); ++c) o.discarded_eigenvalues(static_cast<Eigen::Index>(c)) = lam(drop[c]);
  return o;
}

GevpSolution solve_gevp(const SubspacePair& pair, double epsilon) {
  if (pair.H.rows() != pair.S.rows() || pair.H.cols() != pair.S.cols()) throw ShapeError("H and S differ in shape");
  const Orthogonalizer o = canonical_orthogonalize(pair.S, epsilon);
  const Eigen::MatrixXcd ht = o.X.adjoint() * pair.H * o.X;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (ht + ht.adjoint()));
  if (es.info() != Eigen::Success) throw DegenerateMetricError("projected Hamiltonian diagonalization failed");

  // Ascending value; ties keep retained-basis order.
  const auto r = es.eigenvalues().size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(r));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return es.eigenvalues()(a) < es.eigenvalues()(b); });

  GevpSolution sol;
  sol.retained = static_cast<int>(r);
  sol.discarded_eigenvalues = o.discarded_eigenvalues;
  sol.energies.resize(r);
  sol.C.resize(pair.H.rows(), r);
  for (Eigen::Index k = 0; k < r; ++k) {
    sol.energies(k) = es.eigenvalues()(order[k]);
    sol.C.col(k) = o.X * es.eigenvectors().col(order[k]);
  }
  for (Eigen::Index k = 0; k < r; ++k) {
    const Eigen::VectorXcd res = pair.H * sol.C.col(k) - sol.energies(k) * (pair.S * sol.C.col(k));
    sol.max_residual = std::max(sol.max_residual, res.norm());
  }
  return sol;
}

}  // namespace qse::vqse
