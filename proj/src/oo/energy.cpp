#include "qse/oo/energy.hpp"

#include "qse/errors.hpp"
#include "qse/oo/rotation.hpp"

namespace qse::oo {

void require_unitary(const Eigen::MatrixXd& u, int n) {
  if (u.rows() != n || u.cols() != n) throw ShapeError("rotation size differs from orbital count");
  if (unitarity_violation(u) > kUnitarityTolerance) throw UnitarityError("orbital rotation is not unitary");
}

double energy_of_rotation(const Eigen::MatrixXd& u, const integrals::MolecularIntegrals& mo,
                          const rdm::SpatialRdms& rdms) {
  require_unitary(u, mo.n_spatial);
  return rdm::contract_energy(integrals::rotate_orbitals(mo, u), rdms);
}

rdm::SpatialRdms rotate_rdms(const rdm::SpatialRdms& rdms, const Eigen::MatrixXd& u) {
  const int m = rdms.n_spatial;
  rdm::SpatialRdms out;
  out.n_spatial = m;
  out.gamma = u * rdms.gamma * u.transpose();
  integrals::EriTensor g(m);
  g.data() = rdms.Gamma;
  // transform_eri contracts each index with a column of its argument.
  out.Gamma = integrals::transform_eri(g, u.transpose()).data();
  return out;
}

double energy_of_rotation_rdm_route(const Eigen::MatrixXd& u, const integrals::MolecularIntegrals& mo,
                                    const rdm::SpatialRdms& rdms) {
  require_unitary(u, mo.n_spatial);
  return rdm::contract_energy(mo, rotate_rdms(rdms, u));
}

}  // namespace qse::oo
