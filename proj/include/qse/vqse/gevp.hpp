#pragma once

#include <Eigen/Dense>

#include "qse/vqse/subspace.hpp"

namespace qse::vqse {

inline constexpr double kDefaultEpsilon = 1e-8;
inline constexpr double kNoisyEpsilon = 1e-3;

struct Orthogonalizer {
  Eigen::MatrixXcd X;                 ///< V_r Lambda_r^{-1/2}
  Eigen::VectorXd kept_eigenvalues;   ///< ascending
  Eigen::VectorXd discarded_eigenvalues;
};

/// Keeps metric eigenpairs with lambda > epsilon * lambda_max. Throws
/// DegenerateMetricError when none survive.
Orthogonalizer canonical_orthogonalize(const Eigen::MatrixXcd& S, double epsilon = kDefaultEpsilon);

struct GevpSolution {
  Eigen::VectorXd energies;  ///< ascending
  Eigen::MatrixXcd C;        ///< pool-basis eigenvectors, C^+ S C = I
  int retained = 0;
  Eigen::VectorXd discarded_eigenvalues;
  double max_residual = 0.0;  ///< max_k ||H c_k - E_k S c_k||
};

GevpSolution solve_gevp(const SubspacePair& pair, double epsilon = kDefaultEpsilon);

}  // namespace qse::vqse
