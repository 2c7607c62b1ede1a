#include <doctest.h>

#include <random>

#include "qse/errors.hpp"
#include "qse/fci/hamiltonian.hpp"
#include "qse/integrals/basis.hpp"
#include "qse/units.hpp"
#include "qse/vqse/gevp.hpp"
#include "qse/vqse/pipeline.hpp"
#include "qse/vqse/pool.hpp"
#include "qse/vqse/subspace.hpp"
#include "support.hpp"

using namespace qse;
using namespace qse::vqse;

namespace {

// H and S by explicit application of O_j and H on the embedded state, using
// the undressed integrals with the core occupied.
void check_against_full_space(const integrals::MolecularIntegrals& mo, const integrals::OrbitalPartition& part,
                              const fci::Wavefunction& active_state) {
  const auto dressed = integrals::dress_core(mo, part);
  const auto dsp = integrals::SpinPartition::from(dressed.partition, dressed.integrals.n_spatial);
  const auto pool = build_pool(dsp);
  const auto rdms = rdm::RdmSet::compute(active_state, 4);
  const auto pair = assemble_subspace(pool, dressed.integrals, rdms, dressed.partition);

  const auto sp = integrals::SpinPartition::from(part, mo.n_spatial);
  const auto phi = test::embed(active_state, sp);
  auto to_full = [&](int so) { return 2 * dressed.kept[so / 2] + so % 2; };
  const fci::HamiltonianAction h(mo);
  std::vector<fci::Wavefunction> o_phi, h_o_phi;
  for (const auto& op : pool) {
    auto ops = op.ops();
    for (auto& x : ops) x.index = to_full(x.index);
    o_phi.push_back(fci::apply_string(ops, phi));
    h_o_phi.push_back(h.apply(o_phi.back()));
  }
  double worst_h = 0.0, worst_s = 0.0;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j) {
      const auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
      worst_s = std::max(worst_s, std::abs(pair.S(ii, jj) - o_phi[i].inner(o_phi[j])));
      worst_h = std::max(worst_h, std::abs(pair.H(ii, jj) - o_phi[i].inner(h_o_phi[j])));
    }
  CHECK(worst_s < 1e-12);
  CHECK(worst_h < 1e-11);
  CHECK(pair.h_asymmetry < 1e-11);
}

}  // namespace

TEST_SUITE("vqse") {

TEST_CASE("subspace matrices equal the embedded full-space oracle") {
  std::mt19937_64 rng(41);
  {
    const auto mo = test::random_integrals(5, rng);
    integrals::OrbitalPartition part;
    part.core = {0};
    part.active = {1, 3};
    part.virtuals = {2, 4};
    check_against_full_space(mo, part, test::random_state(4, 2, rng));
  }
  {
    const auto mo = test::random_integrals(6, rng);
    integrals::OrbitalPartition part;
    part.core = {0};
    part.active = {1, 2, 4};
    part.virtuals = {3, 5};
    check_against_full_space(mo, part, test::random_state(6, 3, rng));
    check_against_full_space(mo, part, test::random_state(6, 4, rng));
  }
}

TEST_CASE("pool sizes and spin pruning") {
  integrals::OrbitalPartition part = integrals::OrbitalPartition::from_counts(0, 2, -1, 10);
  const auto sp = integrals::SpinPartition::from(part, 10);
  const auto pool = build_pool(sp);
  CHECK(pool.size() == 1 + 20 * 4 + 120 * 16);
  const auto pruned = prune_spin_violating(pool);
  CHECK(pruned.size() == 777);
  for (const auto& op : pruned) CHECK(op.delta_sz2() == 0);
  CHECK(pool[0].kind == OpKind::Identity);

  PoolOptions only_singles;
  only_singles.doubles = false;
  CHECK(build_pool(sp, only_singles).size() == 81);
  PoolOptions restricted;
  restricted.restrict_to = std::vector<int>{0, 1};
  CHECK(build_pool(sp, restricted).size() == 1 + 18 * 2 + 120 * 4);
  restricted.restrict_to = std::vector<int>{7};
  CHECK_THROWS_AS(build_pool(sp, restricted), DomainError);
  integrals::OrbitalPartition empty;
  empty.virtuals = {0, 1};
  CHECK_THROWS_AS(build_pool(integrals::SpinPartition::from(empty, 2)), DomainError);
}

TEST_CASE("canonical orthogonalization and the generalized eigenproblem") {
  std::mt19937_64 rng(42);
  const int n = 6;
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Random(n, 4);
  SubspacePair p;
  p.S = b * b.adjoint();  // rank 4
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Random(4, 4);
  p.H = b * (a + a.adjoint()) * b.adjoint();
  const auto sol = solve_gevp(p, 1e-10);
  CHECK(sol.retained == 4);
  CHECK(sol.max_residual < 1e-9);
  const Eigen::MatrixXcd ident = sol.C.adjoint() * p.S * sol.C;
  CHECK((ident - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-9);
  // B has full column rank, so the reduced problem is the plain spectrum of A + A^+.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a + a.adjoint());
  for (int k = 0; k < 4; ++k) CHECK(sol.energies(k) == doctest::Approx(es.eigenvalues()(k)).epsilon(1e-8));

  int last = n;
  for (double eps : {1e-14, 1e-8, 1e-4, 1e-2, 0.1, 0.5}) {
    const int r = canonical_orthogonalize(p.S, eps).X.cols();
    CHECK(r <= last);
    last = r;
  }
  CHECK_THROWS_AS(canonical_orthogonalize(Eigen::MatrixXcd::Zero(3, 3), 1e-8), DegenerateMetricError);
}

TEST_CASE("VQSE with the identity never lies above the reference") {
  const auto basis = integrals::BasisSet::load_named("6-31g");
  const auto part = integrals::OrbitalPartition::from_counts(0, 2, -1, 4);
  for (double r : {0.5, 0.9, 1.6, 2.4}) {
    const auto sys = prepare_system(integrals::Geometry::diatomic("H", "H", units::angstrom_to_bohr(r)), basis);
    const auto v = run_vqse(sys.mo, part, 2);
    CHECK(v.e_vqse <= v.e_ref + 1e-10);
    CHECK(v.e_vqse >= full_fci(sys.mo, 2).energy - 1e-10);
    // identity, same-spin singles, doubles: (aa + bb) virtual pairs x 4 plus 4 mixed pairs x 8
    CHECK(v.pool_size == 1 + 16 + 2 * 4 + 4 * 8);
  }
}

TEST_CASE("complete active space makes VQSE equal to FCI") {
  const auto sys = prepare_system(integrals::Geometry::diatomic("H", "H", 1.4), integrals::BasisSet::load_named("sto-3g"));
  const auto part = integrals::OrbitalPartition::from_counts(0, 2, 0, 2);
  const auto v = run_vqse(sys.mo, part, 2);
  CHECK(v.e_vqse == doctest::Approx(full_fci(sys.mo, 2).energy).epsilon(1e-11));
  CHECK(v.e_ref == doctest::Approx(v.e_vqse).epsilon(1e-11));
}

TEST_CASE("cumulant mode is exact when the reference is a single determinant") {
  // Active space holding a closed shell: the ground state is one determinant.
  std::mt19937_64 rng(43);
  auto mo = test::random_integrals(4, rng, 0.02);
  for (int p = 0; p < 4; ++p) mo.h1(p, p) = -2.0 + p;
  mo.h1(0, 1) = mo.h1(1, 0) = 0.0;
  const auto part = integrals::OrbitalPartition::from_counts(0, 1, -1, 4);
  VqseOptions exact, cum;
  cum.rdm_mode = RdmMode::Cumulant;
  const auto a = run_vqse(mo, part, 2, exact);
  const auto b = run_vqse(mo, part, 2, cum);
  CHECK(a.e_vqse == doctest::Approx(b.e_vqse).epsilon(1e-10));
  CHECK((a.subspace.H - b.subspace.H).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("shot noise is reproducible for a fixed seed") {
  const auto sys = prepare_system(integrals::Geometry::diatomic("H", "H", 1.4), integrals::BasisSet::load_named("6-31g"));
  const auto part = integrals::OrbitalPartition::from_counts(0, 2, -1, 4);
  VqseOptions opt;
  opt.shots = 1e6;
  opt.seed = 9;
  opt.epsilon = kNoisyEpsilon;
  const auto a = run_vqse(sys.mo, part, 2, opt);
  const auto b = run_vqse(sys.mo, part, 2, opt);
  CHECK(a.e_vqse == b.e_vqse);
  opt.seed = 10;
  CHECK(run_vqse(sys.mo, part, 2, opt).e_vqse != a.e_vqse);
}

TEST_CASE("assembly rejects a partition with core orbitals") {
  std::mt19937_64 rng(44);
  const auto mo = test::random_integrals(3, rng);
  integrals::OrbitalPartition part;
  part.core = {0};
  part.active = {1};
  part.virtuals = {2};
  const auto psi = test::random_state(2, 1, rng);
  const auto sp = integrals::SpinPartition::from(part, 3);
  CHECK_THROWS_AS(assemble_subspace(build_pool(sp), mo, rdm::RdmSet::compute(psi, 2), part), PartitionError);
}

}
