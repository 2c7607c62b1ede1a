#include "qse/oo/mcscf.hpp"

#include <algorithm>
#include <cmath>

#include "qse/errors.hpp"
#include "qse/vqse/pipeline.hpp"

namespace qse::oo {
namespace {

integrals::OrbitalPartition sorted_active(integrals::OrbitalPartition p) {
  std::sort(p.active.begin(), p.active.end());
  return p;
}

}  // namespace

ActiveReference active_reference(const integrals::MolecularIntegrals& mo, const integrals::OrbitalPartition& partition,
                                 int n_electrons, int sz2) {
  // Active RDMs are embedded by position in the sorted active list.
  const auto part = sorted_active(partition);
  const auto act = vqse::solve_active_space(mo, part, n_electrons, sz2);
  const auto& psi = act.ground.wavefunction;
  ActiveReference ref;
  ref.energy = act.ground.energy;
  ref.composite = rdm::composite_full_rdms(rdm::compute_rdm(psi, 1), rdm::compute_rdm(psi, 2), part, mo.n_spatial);
  ref.spatial = rdm::spin_summed(ref.composite.d1, ref.composite.d2);
  return ref;
}

SingleStep relax_once(const integrals::MolecularIntegrals& mo, const integrals::OrbitalPartition& partition,
                      int n_electrons, RelaxMode mode, const SweepOptions& sweep, const JointOptions& joint) {
  const auto ref = active_reference(mo, partition, n_electrons);
  SingleStep out;
  out.active_energy = ref.energy;
  if (mode == RelaxMode::Joint) {
    JointOptions opt = joint;
    opt.include_active_active = sweep.include_active_active;
    out.relaxation = joint_optimize(mo, ref.spatial, partition, RotationParameters::identity(mo.n_spatial), opt);
  } else {
    out.relaxation = givens_sweep(mo, ref.spatial, partition, sweep);
    if (mode == RelaxMode::SweepThenJoint) {
      auto j = joint_optimize(mo, ref.spatial, partition, out.relaxation.rotation, joint);
      j.report.initial_energy = out.relaxation.report.initial_energy;
      out.relaxation = std::move(j);
    }
  }
  out.relaxed_energy = out.relaxation.report.final_energy;
  return out;
}

McscfResult relax_then_resolve(const integrals::MolecularIntegrals& mo, const integrals::OrbitalPartition& partition,
                               int n_electrons, int cycles, const SweepOptions& sweep, double energy_tol) {
  if (cycles < 1) throw DomainError("relax_then_resolve needs at least one cycle");
  McscfResult res;
  res.rotation = Eigen::MatrixXd::Identity(mo.n_spatial, mo.n_spatial);
  integrals::MolecularIntegrals cur = mo;
  for (int c = 0; c < cycles; ++c) {
    const auto ref = active_reference(cur, partition, n_electrons);
    const auto r = givens_sweep(cur, ref.spatial, partition, sweep);
    const Eigen::MatrixXd u = r.rotation.unitary();
    res.rotation = res.rotation * u;
    cur = integrals::rotate_orbitals(cur, u);
    res.cycles.push_back({ref.energy, r.report.final_energy, r.report.sweeps});
    const double prev = res.energy;
    res.energy = r.report.final_energy;
    if (c > 0 && std::abs(prev - res.energy) < energy_tol) break;
  }
  return res;
}

}  // namespace qse::oo
