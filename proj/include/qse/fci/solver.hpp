#pragma once

#include <optional>

#include "qse/fci/hamiltonian.hpp"

namespace qse::fci {

struct GroundStateOptions {
  std::optional<int> sz2;          ///< twice S_z; nullopt = no S_z restriction
  std::size_t dense_limit = 2000;  ///< Davidson above this sector size
  double residual_tol = 1e-10;
  int max_iter = 500;
  double degeneracy_tol = 1e-8;
};

struct GroundState {
  double energy = 0.0;
  Wavefunction wavefunction;
  double gap = 0.0;          ///< E1 - E0 (infinity for a 1-d sector)
  bool degenerate = false;   ///< gap below degeneracy_tol
  double residual = 0.0;     ///< ||H psi - E psi||
  std::size_t sector_size = 0;
};

/// Lowest eigenpair of the sector. The largest-magnitude amplitude (first in
/// bitmask order among ties) is made real positive. Throws DomainError for an
/// empty sector and ConvergenceError if Davidson stalls.
GroundState ground_state(const HamiltonianAction& h, int n_electrons, const GroundStateOptions& options = {});

}  // namespace qse::fci
