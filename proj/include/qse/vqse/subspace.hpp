#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qse/integrals/mo_integrals.hpp"
#include "qse/rdm/rdm.hpp"
#include "qse/vqse/pool.hpp"

namespace qse::vqse {

struct SubspacePair {
  Eigen::MatrixXcd H;
  Eigen::MatrixXcd S;
  std::vector<ExpansionOperator> pool;
  double h_asymmetry = 0.0;  ///< max |H - H^+| before symmetrization
  double s_asymmetry = 0.0;
};

/// H_ij = <O_i^+ H O_j>, S_ij = <O_i^+ O_j> over Psi_A (x) virtual vacuum.
/// `mo` holds the (core-dressed) integrals over every orbital of
/// `partition`; the RDMs are over the active spin orbitals in partition
/// order. Both matrices are replaced by their Hermitian part.
SubspacePair assemble_subspace(const std::vector<ExpansionOperator>& pool, const integrals::MolecularIntegrals& mo,
                               const rdm::RdmSet& active_rdms, const integrals::OrbitalPartition& partition);

}  // namespace qse::vqse
