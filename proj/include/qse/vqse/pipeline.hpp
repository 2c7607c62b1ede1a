#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qse/fci/solver.hpp"
#include "qse/integrals/ao_integrals.hpp"
#include "qse/integrals/basis.hpp"
#include "qse/integrals/geometry.hpp"
#include "qse/integrals/mo_integrals.hpp"
#include "qse/integrals/scf.hpp"
#include "qse/rdm/rdm.hpp"
#include "qse/vqse/gevp.hpp"

namespace qse::vqse {

enum class RdmMode { Exact, Cumulant };

struct VqseOptions {
  PoolOptions pool;
  bool prune_spin = true;
  double epsilon = kDefaultEpsilon;
  RdmMode rdm_mode = RdmMode::Exact;
  int cumulant_rank = 2;             ///< 2 or 3 in cumulant mode
  std::optional<double> shots;       ///< noise on the measured RDMs
  std::uint64_t seed = 0;
  int sz2 = 0;
};

/// Hartree-Fock and MO integrals of a neutral or charged molecule.
struct MolecularSystem {
  integrals::Geometry geometry;
  integrals::ScfResult scf;
  integrals::MolecularIntegrals mo;
  int n_electrons = 0;
};

MolecularSystem prepare_system(const integrals::Geometry& geometry, const integrals::BasisSet& basis, int charge = 0);

/// Exact ground state over every orbital of `mo`.
fci::GroundState full_fci(const integrals::MolecularIntegrals& mo, int n_electrons, int sz2 = 0);

/// Active-space ground state of the core-dressed Hamiltonian.
struct ActiveSolution {
  integrals::DressedIntegrals dressed;        ///< over active + virtual
  integrals::MolecularIntegrals active;       ///< dressed, active only
  fci::GroundState ground;
  int n_active_electrons = 0;
};

ActiveSolution solve_active_space(const integrals::MolecularIntegrals& mo, const integrals::OrbitalPartition& partition,
                                  int n_electrons, int sz2 = 0);

/// RDMs of ranks 1..4 handed to the subspace assembly: exact, or 3-/4-RDM
/// from the cumulant expansion; optionally with shot noise on every rank
/// that does not vanish identically.
rdm::RdmSet reference_rdms(const fci::Wavefunction& psi, const VqseOptions& options);

struct VqseResult {
  double e_ref = 0.0;   ///< active-space energy
  double e_vqse = 0.0;  ///< lowest GEVP eigenvalue
  std::optional<double> e_first_excited;
  int pool_size = 0;
  int retained = 0;
  SubspacePair subspace;
  GevpSolution gevp;
};

VqseResult run_vqse(const integrals::MolecularIntegrals& mo, const integrals::OrbitalPartition& partition,
                    int n_electrons, const VqseOptions& options = {});

struct CurveRow {
  double r_angstrom = 0.0;
  double e_ref = 0.0;
  double e_vqse = 0.0;
  double e_fci_full = 0.0;
  int pool_size = 0;
  int retained = 0;
  bool ok = false;
  std::string error;
};

/// One row per bond length of the diatomic a-b; failed points are flagged
/// and the scan continues.
std::vector<CurveRow> vqse_energy_curve(const std::string& atom_a, const std::string& atom_b,
                                        std::span<const double> r_angstrom, const integrals::BasisSet& basis,
                                        const integrals::OrbitalPartition& partition, const VqseOptions& options = {});

}  // namespace qse::vqse
