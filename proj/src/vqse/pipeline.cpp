#include "qse/vqse/pipeline.hpp"

#include "qse/errors.hpp"
#include "qse/rdm/cumulant.hpp"
#include "qse/rdm/noise.hpp"
#include "qse/units.hpp"

namespace qse::vqse {

MolecularSystem prepare_system(const integrals::Geometry& geometry, const integrals::BasisSet& basis, int charge) {
  MolecularSystem sys;
  sys.geometry = geometry;
  sys.n_electrons = geometry.total_nuclear_charge() - charge;
  const auto ao = integrals::compute_ao_integrals(geometry, basis);
  sys.scf = integrals::run_rhf(ao, sys.n_electrons);
  sys.mo = integrals::transform_to_mo(ao, sys.scf.mo_coefficients);
  return sys;
}

fci::GroundState full_fci(const integrals::MolecularIntegrals& mo, int n_electrons, int sz2) {
  const fci::HamiltonianAction h(mo);
  fci::GroundStateOptions opt;
  opt.sz2 = sz2;
  return fci::ground_state(h, n_electrons, opt);
}

ActiveSolution solve_active_space(const integrals::MolecularIntegrals& mo, const integrals::OrbitalPartition& partition,
                                  int n_electrons, int sz2) {
  ActiveSolution sol;
  sol.dressed = integrals::dress_core(mo, partition);
  sol.active = sol.dressed.integrals.restricted_to(sol.dressed.partition.active);
  sol.n_active_electrons = n_electrons - 2 * static_cast<int>(partition.core.size());
  if (sol.n_active_electrons < 0) throw PartitionError("core holds more electrons than the molecule");
  const fci::HamiltonianAction h(sol.active);
  fci::GroundStateOptions opt;
  opt.sz2 = sz2;
  sol.ground = fci::ground_state(h, sol.n_active_electrons, opt);
  return sol;
}

rdm::RdmSet reference_rdms(const fci::Wavefunction& psi, const VqseOptions& options) {
  rdm::RdmSet set;
  set.n = psi.n_spin_orbitals();
  set.n_electrons = psi.n_electrons();
  const int max_exact = options.rdm_mode == RdmMode::Exact ? 4 : (options.cumulant_rank == 3 ? 3 : 2);
  for (int k = 1; k <= max_exact; ++k) set.put(rdm::compute_rdm(psi, k));
  if (options.shots) {
    for (int k = 1; k <= max_exact; ++k) {
      const rdm::Rdm& d = set.get(k);
      if (d.exceeds_particle_number) continue;
      rdm::Rdm noisy = rdm::inject_shot_noise(d, *options.shots, options.seed * 8 + static_cast<std::uint64_t>(k));
      noisy.n_electrons = d.n_electrons;
      set.put(std::move(noisy));
    }
  }
  if (options.rdm_mode == RdmMode::Cumulant) {
    const rdm::Rdm& d1 = set.get(1);
    const rdm::Rdm& d2 = set.get(2);
    if (options.cumulant_rank == 3) {
      rdm::Rdm d4 = rdm::cumulant_4rdm(d1, d2, 3, &set.get(3));
      set.put(std::move(d4));
    } else if (options.cumulant_rank == 2) {
      rdm::Rdm d3 = rdm::reconstruct_3rdm(d1, d2);
      rdm::Rdm d4 = rdm::cumulant_4rdm(d1, d2, 2);
      set.put(std::move(d3));
      set.put(std::move(d4));
    } else {
      throw DomainError("cumulant rank must be 2 or 3");
    }
  }
  return set;
}

VqseResult run_vqse(const integrals::MolecularIntegrals& mo, const integrals::OrbitalPartition& partition,
                    int n_electrons, const VqseOptions& options) {
  const ActiveSolution act = solve_active_space(mo, partition, n_electrons, options.sz2);
  const rdm::RdmSet rdms = reference_rdms(act.ground.wavefunction, options);

  const auto& part = act.dressed.partition;
  const auto sp = integrals::SpinPartition::from(part, act.dressed.integrals.n_spatial);
  PoolOptions pool_opt = options.pool;
  pool_opt.include_identity = true;
  auto pool = build_pool(sp, pool_opt);
  if (options.prune_spin) pool = prune_spin_violating(pool);

  VqseResult res;
  res.e_ref = act.ground.energy;
  res.subspace = assemble_subspace(pool, act.dressed.integrals, rdms, part);
  res.gevp = solve_gevp(res.subspace, options.epsilon);
  res.e_vqse = res.gevp.energies(0);
  if (res.gevp.energies.size() > 1) res.e_first_excited = res.gevp.energies(1);
  res.pool_size = static_cast<int>(pool.size());
  res.retained = res.gevp.retained;
  return res;
}

std::vector<CurveRow> vqse_energy_curve(const std::string& atom_a, const std::string& atom_b,
                                        std::span<const double> r_angstrom, const integrals::BasisSet& basis,
                                        const integrals::OrbitalPartition& partition, const VqseOptions& options) {
  std::vector<CurveRow> rows;
  for (double r : r_angstrom) {
    CurveRow row;
    row.r_angstrom = r;
    try {
      const auto geom = integrals::Geometry::diatomic(atom_a, atom_b, units::angstrom_to_bohr(r));
      const auto sys = prepare_system(geom, basis);
      const auto v = run_vqse(sys.mo, partition, sys.n_electrons, options);
      row.e_ref = v.e_ref;
      row.e_vqse = v.e_vqse;
      row.pool_size = v.pool_size;
      row.retained = v.retained;
      row.e_fci_full = full_fci(sys.mo, sys.n_electrons, options.sz2).energy;
      row.ok = true;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qse::vqse
