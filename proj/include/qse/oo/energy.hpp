#pragma once

#include <Eigen/Dense>

#include "qse/integrals/mo_integrals.hpp"
#include "qse/rdm/rdm.hpp"

namespace qse::oo {

/// Energy of the fixed RDMs in orbitals rotated by u (phi'_p = sum_q phi_q u_qp),
/// by transforming the integrals. Throws UnitarityError when
/// ||u^T u - I|| > 1e-8.
double energy_of_rotation(const Eigen::MatrixXd& u, const integrals::MolecularIntegrals& mo,
                          const rdm::SpatialRdms& rdms);

/// Same energy with the integrals fixed and the RDMs rotated,
///   gamma' = u gamma u^T,  Gamma'_pqrs = sum u_pa u_qb u_rc u_sd Gamma_abcd.
double energy_of_rotation_rdm_route(const Eigen::MatrixXd& u, const integrals::MolecularIntegrals& mo,
                                    const rdm::SpatialRdms& rdms);

rdm::SpatialRdms rotate_rdms(const rdm::SpatialRdms& rdms, const Eigen::MatrixXd& u);

inline constexpr double kUnitarityTolerance = 1e-8;
void require_unitary(const Eigen::MatrixXd& u, int n);

}  // namespace qse::oo
