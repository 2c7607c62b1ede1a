#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qse/integrals/mo_integrals.hpp"
#include "qse/oo/givens.hpp"
#include "qse/oo/joint.hpp"
#include "qse/rdm/composite.hpp"

namespace qse::oo {

/// Full-space RDMs of core x active ground state x empty virtuals for the
/// orbitals of `mo`, plus the active-space energy.
struct ActiveReference {
  double energy = 0.0;
  rdm::CompositeRdms composite;
  rdm::SpatialRdms spatial;
};

ActiveReference active_reference(const integrals::MolecularIntegrals& mo, const integrals::OrbitalPartition& partition,
                                 int n_electrons, int sz2 = 0);

/// Joint runs the simplex from the unrotated orbitals; SweepThenJoint starts
/// it from the sweep result.
enum class RelaxMode { Sweep, Joint, SweepThenJoint };

struct SingleStep {
  double active_energy = 0.0;
  double relaxed_energy = 0.0;
  RelaxationResult relaxation;
};

/// One round of orbital relaxation of the active-space ground state.
SingleStep relax_once(const integrals::MolecularIntegrals& mo, const integrals::OrbitalPartition& partition,
                      int n_electrons, RelaxMode mode = RelaxMode::Sweep, const SweepOptions& sweep = {},
                      const JointOptions& joint = {});

struct McscfCycle {
  double active_energy = 0.0;   ///< FCI in the current orbitals
  double relaxed_energy = 0.0;  ///< after the sweep
  int sweeps = 0;
};

struct McscfResult {
  std::vector<McscfCycle> cycles;
  Eigen::MatrixXd rotation;  ///< accumulated, phi'_p = sum_q phi_q U_qp
  double energy = 0.0;
};

/// Alternates active-space FCI in the current orbitals with a Givens sweep.
/// Stops early when a cycle changes the energy by less than energy_tol.
McscfResult relax_then_resolve(const integrals::MolecularIntegrals& mo, const integrals::OrbitalPartition& partition,
                               int n_electrons, int cycles, const SweepOptions& sweep = {}, double energy_tol = 0.0);

}  // namespace qse::oo
