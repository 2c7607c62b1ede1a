#pragma once

#include <vector>

#include "qse/oo/givens.hpp"

namespace qse::oo {

struct JointOptions {
  int budget = 5000;          ///< optimizer energy evaluations (the starting energy is not counted)
  double initial_step = 0.1;  ///< simplex size, radians
  double size_tol = 1e-9;
  bool include_active_active = false;
};

/// Nelder-Mead over one angle per non-redundant pair, applied on top of
/// `start` (its unitary becomes the base). Returns the best point seen;
/// running out of budget sets report.budget_exhausted.
RelaxationResult joint_optimize(const integrals::MolecularIntegrals& mo, const rdm::SpatialRdms& rdms,
                                const integrals::OrbitalPartition& partition, const RotationParameters& start,
                                const JointOptions& options = {});

}  // namespace qse::oo
