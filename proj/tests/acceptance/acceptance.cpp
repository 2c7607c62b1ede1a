// Acceptance run: one PASS/FAIL line per criterion.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <bit>
#include <functional>
#include <map>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qse/fci/hamiltonian.hpp"
#include "qse/fci/solver.hpp"
#include "qse/integrals/basis.hpp"
#include "qse/integrals/fcidump.hpp"
#include "qse/oo/givens.hpp"
#include "qse/oo/mcscf.hpp"
#include "qse/rdm/cumulant.hpp"
#include "qse/rdm/rdm.hpp"
#include "qse/units.hpp"
#include "qse/vqse/gevp.hpp"
#include "qse/vqse/pipeline.hpp"
#include "qse/wick/evaluate.hpp"
#include "support.hpp"
#include "wick_oracles.hpp"

using namespace qse;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

integrals::OrbitalPartition two_active(int n_spatial) { return integrals::OrbitalPartition::from_counts(0, 2, -1, n_spatial); }

const integrals::BasisSet& basis(const std::string& name) {
  static std::map<std::string, integrals::BasisSet> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, integrals::BasisSet::load_named(name)).first;
  return it->second;
}

vqse::MolecularSystem h2(const std::string& b, double r_angstrom) {
  return vqse::prepare_system(integrals::Geometry::diatomic("H", "H", units::angstrom_to_bohr(r_angstrom)), basis(b));
}

// Everything criteria 3, 4, 6, 8 and 9 need at one bond length.
struct GridPoint {
  double r = 0.0;
  nlohmann::json oracle;
  double rhf_sto3g = 0, rhf_631g = 0, rhf_vdz = 0;
  double fci_sto3g = 0, fci_631g = 0, fci_vdz = 0;
  vqse::VqseResult vqse_631g, vqse_vdz;
  double rdm_energy_error = 0.0;  ///< max over every ground state solved here
  double max_residual = 0.0;
};

void track_rdm_energy(GridPoint& g, const integrals::MolecularIntegrals& mo, const fci::GroundState& gs) {
  const auto d1 = rdm::compute_rdm(gs.wavefunction, 1);
  const auto d2 = rdm::compute_rdm(gs.wavefunction, 2);
  g.rdm_energy_error = std::max(g.rdm_energy_error, std::abs(rdm::energy_from_rdms(mo, d1, d2) - gs.energy));
  g.max_residual = std::max(g.max_residual, gs.residual);
}

std::vector<GridPoint>& grid() {
  static std::vector<GridPoint> points = [] {
    std::vector<GridPoint> out;
    for (const auto& row : test::load_json("h2_curves.json")) {
      GridPoint g;
      g.r = row["r_angstrom"].get<double>();
      g.oracle = row;
      for (const std::string b : {"sto-3g", "6-31g", "cc-pvdz"}) {
        const auto sys = h2(b, g.r);
        const auto fci = vqse::full_fci(sys.mo, 2);
        track_rdm_energy(g, sys.mo, fci);
        const auto part = two_active(sys.mo.n_spatial);
        const auto act = vqse::solve_active_space(sys.mo, part, 2);
        track_rdm_energy(g, act.active, act.ground);
        if (b == "sto-3g") {
          g.rhf_sto3g = sys.scf.scf_energy;
          g.fci_sto3g = fci.energy;
        } else if (b == "6-31g") {
          g.rhf_631g = sys.scf.scf_energy;
          g.fci_631g = fci.energy;
          g.vqse_631g = vqse::run_vqse(sys.mo, part, 2);
        } else {
          g.rhf_vdz = sys.scf.scf_energy;
          g.fci_vdz = fci.energy;
          g.vqse_vdz = vqse::run_vqse(sys.mo, part, 2);
        }
      }
      out.push_back(std::move(g));
    }
    return out;
  }();
  return points;
}

// 6-31G orbital relaxation data for criteria 5 and 6.
struct RelaxPoint {
  double r = 0.0;
  double exact = 0.0;
  double cas4 = 0.0, cas6 = 0.0;  // no relaxation
  double sweep4 = 0.0;            // single step, Givens sweep
  double joint4 = 0.0;            // single step, simplex from the RHF orbitals
  double best4 = 0.0, best6 = 0.0;  // lowest of single steps and converged relax/re-solve runs
  double oracle_cas4 = 0.0, oracle_cas6 = 0.0;
  oo::SingleStep single;
};

// Converged relax/re-solve, from the given orbitals and from the orbitals of
// a joint single step; the lower energy is kept.
double converged_relaxation(const integrals::MolecularIntegrals& mo, const integrals::OrbitalPartition& part,
                            const oo::SingleStep& joint) {
  const double plain = oo::relax_then_resolve(mo, part, 2, 300, {}, 1e-13).energy;
  const auto seeded_mo = integrals::rotate_orbitals(mo, joint.relaxation.rotation.unitary());
  const double seeded = oo::relax_then_resolve(seeded_mo, part, 2, 300, {}, 1e-13).energy;
  return std::min(plain, seeded);
}

std::vector<RelaxPoint>& relax_grid() {
  static std::vector<RelaxPoint> points = [] {
    std::vector<RelaxPoint> out;
    const auto oracle = test::load_json("h2_631g_casscf.json");
    for (const auto& row : oracle) {
      RelaxPoint p;
      p.r = row["r_angstrom"].get<double>();
      p.oracle_cas4 = row["cas2"].get<double>();
      p.oracle_cas6 = row["cas3"].get<double>();
      const auto sys = h2("6-31g", p.r);
      const int n = sys.mo.n_spatial;
      const auto part4 = two_active(n);
      const auto part6 = integrals::OrbitalPartition::from_counts(0, 3, -1, n);
      p.exact = vqse::full_fci(sys.mo, 2).energy;
      p.single = oo::relax_once(sys.mo, part4, 2, oo::RelaxMode::Sweep);
      p.cas4 = p.single.active_energy;
      p.sweep4 = p.single.relaxed_energy;
      const auto joint4 = oo::relax_once(sys.mo, part4, 2, oo::RelaxMode::Joint);
      p.joint4 = joint4.relaxed_energy;
      p.best4 = std::min({p.sweep4, p.joint4, converged_relaxation(sys.mo, part4, joint4)});
      const auto sweep6 = oo::relax_once(sys.mo, part6, 2, oo::RelaxMode::Sweep);
      const auto joint6 = oo::relax_once(sys.mo, part6, 2, oo::RelaxMode::Joint);
      p.cas6 = sweep6.active_energy;
      p.best6 = std::min({sweep6.relaxed_energy, joint6.relaxed_energy, converged_relaxation(sys.mo, part6, joint6)});
      out.push_back(p);
    }
    return out;
  }();
  return points;
}

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1001);
  int count = 0, nonzero = 0;
  double worst = 0.0;
  for (int inst = 0; inst < 24; ++inst) {
    const int na = 1 + inst % 2, nv = 1 + (inst / 2) % 2;
    const int ne = 1 + inst % (2 * na);
    const auto w = test::make_instance(na, nv, ne, rng);
    const int n_so = 2 * (na + nv);
    wick::ActiveExpectation act(w.rdms);
    for (int t = 0; t < 50; ++t) {
      fci::OperatorString ops;
      if (t % 3 == 0) ops = test::random_string(1 + t % 12, n_so, rng);
      else ops = test::random_contractible_string(w.sp, 1 + t % std::min(4, 2 * na), t % (nv + 1) + (t % 5 == 0), rng);
      const auto engine = wick::evaluate(wick::label(ops, w.sp), act, w.sp);
      const auto oracle = fci::full_space_expectation(w.full, ops, w.full);
      worst = std::max(worst, std::abs(engine - oracle));
      nonzero += std::abs(oracle) > 1e-9;
      ++count;
    }
  }
  const double secs = seconds_since(t0);
  return {count >= 1000 && worst <= 1e-12 && secs < 60.0,
          fmt("%d strings (%d nonzero), max |engine - full space| %.2e (tol 1e-12), %.1f s (limit 60 s)", count, nonzero,
              worst, secs)};
}

Outcome criterion2() {
  std::mt19937_64 rng(1002);
  const auto w = test::make_instance(3, 2, 4, rng);
  double worst = 0.0, worst_full = 0.0;
  int nonzero = 0;
  for (int t = 0; t < 100; ++t) {
    const auto [xi, s, eta, r, i, j, k, l, mu, p, nu, q] = test::random_double_double_tuple(w.sp, rng);
    const auto ops = test::double_double_string(xi, s, eta, r, i, j, k, l, mu, p, nu, q);
    const auto engine = wick::evaluate(wick::label(ops, w.sp), w.rdms, w.sp);
    const auto hand = test::double_double_by_hand(w, xi, s, eta, r, i, j, k, l, mu, p, nu, q);
    worst = std::max(worst, std::abs(engine - hand));
    worst_full = std::max(worst_full, std::abs(engine - fci::full_space_expectation(w.full, ops, w.full)));
    nonzero += std::abs(hand) > 1e-9;
  }
  return {worst <= 1e-12, fmt("100 tuples (%d nonzero), max |engine - hand contraction| %.2e (tol 1e-12); "
                              "vs full space %.2e",
                              nonzero, worst, worst_full)};
}

Outcome criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& g = grid();
  double worst = 0.0, worst_r = 0.0, oracle_dev = 0.0;
  for (const auto& p : g) {
    const double e = std::abs(p.vqse_vdz.e_vqse - p.fci_vdz);
    if (e > worst) worst = e, worst_r = p.r;
    oracle_dev = std::max(oracle_dev, std::abs(p.fci_vdz - p.oracle["ccpvdz_fci"].get<double>()));
  }
  const double secs = seconds_since(t0);
  return {worst <= 2e-5 && !g.empty(),
          fmt("%zu points 0.3-2.5 A, max |E_VQSE - E_FCI(cc-pVDZ)| %.2e at R=%.1f (tol 2e-5); pool %d; "
              "E_FCI vs oracle %.1e; %.0f s (target 600 s)",
              g.size(), worst, worst_r, g.front().vqse_vdz.pool_size, oracle_dev, secs)};
}

Outcome criterion4() {
  static const char* names[] = {"FCI(STO-3G)", "VQSE(6-31G)", "FCI(6-31G)", "VQSE(VDZ)", "FCI(VDZ)"};
  int violations = 0;
  std::string where;
  for (const auto& p : grid()) {
    const double chain[] = {p.fci_sto3g, p.vqse_631g.e_vqse, p.fci_631g, p.vqse_vdz.e_vqse, p.fci_vdz};
    for (int k = 0; k + 1 < 5; ++k)
      if (chain[k] < chain[k + 1] - 1e-8) {
        ++violations;
        where += fmt(" R=%.1f %s < %s by %.2e (oracle FCI 6-31G %.6f, VDZ %.6f);", p.r, names[k], names[k + 1],
                     chain[k + 1] - chain[k], p.oracle["631g_fci"].get<double>(), p.oracle["ccpvdz_fci"].get<double>());
      }
  }
  return {violations == 0,
          fmt("%d ordering violations over %zu points (slack 1e-8)%s", violations, grid().size(), where.c_str())};
}

Outcome criterion5() {
  const auto& rp = relax_grid();
  double worst4 = 0.0, worst_r = 0.0, worst_sweep = 0.0, worst_joint = 0.0, worst6 = 0.0;
  double oracle_floor = std::numeric_limits<double>::infinity(), oracle_max = 0.0, agree = 0.0;
  int between = 0;
  for (const auto& p : rp) {
    const double e = p.best4 - p.exact;
    if (e > worst4) worst4 = e, worst_r = p.r;
    worst_sweep = std::max(worst_sweep, p.sweep4 - p.exact);
    worst_joint = std::max(worst_joint, p.joint4 - p.exact);
    worst6 = std::max(worst6, p.best6 - p.exact);
    between += p.best4 >= p.best6 - 1e-8 && p.best6 >= p.exact - 1e-8;
    oracle_floor = std::min(oracle_floor, p.oracle_cas4 - p.exact);
    oracle_max = std::max(oracle_max, p.oracle_cas4 - p.exact);
    agree = std::max(agree, std::abs(p.best4 - p.oracle_cas4));
  }
  const bool interp = between == static_cast<int>(rp.size());
  return {worst4 <= 5e-5 && interp,
          fmt("4-qubit OO vs 8-qubit exact: max %.2e at R=%.1f (tol 5e-5) [single sweep %.2e, single joint %.2e]; "
              "reference CAS(2,2)SCF error %.2e..%.2e, ours within %.1e of it; 6-qubit OO max %.2e, between 4-qubit "
              "OO and exact at %d/%zu points",
              worst4, worst_r, worst_sweep, worst_joint, oracle_floor, oracle_max, agree, worst6, between, rp.size())};
}

Outcome criterion6() {
  int vqse_bad = 0, trace_bad = 0, step_bad = 0, n = 0;
  for (const auto& p : grid()) {
    vqse_bad += p.vqse_631g.e_vqse > p.vqse_631g.e_ref + 1e-10;
    vqse_bad += p.vqse_vdz.e_vqse > p.vqse_vdz.e_ref + 1e-10;
    n += 2;
  }
  for (const auto& p : relax_grid()) {
    const auto& tr = p.single.relaxation.report.energy_trace;
    for (std::size_t k = 1; k < tr.size(); ++k) trace_bad += tr[k] > tr[k - 1];
    step_bad += p.single.relaxed_energy > p.single.active_energy;
    step_bad += p.joint4 > p.cas4;
  }
  return {vqse_bad == 0 && trace_bad == 0 && step_bad == 0,
          fmt("E_VQSE > E_ref at %d/%d points (slack 1e-10); non-monotone sweep steps %d; single-step raises %d over "
              "%zu points",
              vqse_bad, n, trace_bad, step_bad, relax_grid().size())};
}

// Rotated determinant: amplitude of bit set P is det(C[P, :]).
fci::Wavefunction rotated_determinant(const Eigen::MatrixXd& c) {
  const int n = static_cast<int>(c.rows()), ne = static_cast<int>(c.cols());
  fci::Wavefunction psi(n, ne);
  for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
    if (std::popcount(bits) != ne) continue;
    Eigen::MatrixXd m(ne, ne);
    for (int p = 0, row = 0; p < n; ++p)
      if (bits >> p & 1) m.row(row++) = c.row(p);
    const double v = m.determinant();
    if (std::abs(v) > 1e-15) psi.set(fci::Determinant{bits}, v);
  }
  psi.normalize();
  return psi;
}

Outcome criterion7() {
  std::mt19937_64 rng(1007);
  double worst_hf = 0.0;
  int n_hf = 0;
  // Aufbau and rotated determinants, and the RHF determinants of random 4-electron Hamiltonians.
  for (std::uint64_t bits : {0b00001111ull, 0b00110011ull, 0b01011010ull}) {
    const auto set = rdm::RdmSet::compute(fci::Wavefunction::determinant(8, fci::Determinant{bits}), 4);
    worst_hf = std::max(worst_hf, rdm::reconstruction_error(rdm::cumulant_4rdm(set.get(1), set.get(2)), set.get(4)));
    ++n_hf;
  }
  for (int t = 0; t < 4; ++t) {
    const auto u = test::random_orthogonal(4, rng);
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(8, 4);
    for (int p = 0; p < 4; ++p)
      for (int k = 0; k < 2; ++k) {
        c(2 * p, 2 * k) = u(p, k);  // alpha
        c(2 * p + 1, 2 * k + 1) = u(p, k);  // beta
      }
    const auto set = rdm::RdmSet::compute(rotated_determinant(c), 4);
    worst_hf = std::max(worst_hf, rdm::reconstruction_error(rdm::cumulant_4rdm(set.get(1), set.get(2)), set.get(4)));
    ++n_hf;
  }
  std::vector<double> corr2, corr3;
  for (int t = 0; t < 4; ++t) {
    const auto mo = test::random_integrals(4, rng);
    const auto gs = fci::ground_state(fci::HamiltonianAction(mo), 4);
    const auto set = rdm::RdmSet::compute(gs.wavefunction, 4);
    corr2.push_back(rdm::reconstruction_error(rdm::cumulant_4rdm(set.get(1), set.get(2), 2), set.get(4)));
    corr3.push_back(rdm::reconstruction_error(rdm::cumulant_4rdm(set.get(1), set.get(2), 3, &set.get(3)), set.get(4)));
  }
  return {worst_hf <= 1e-10,
          fmt("%d determinants, max ||D4_rec - D4|| %.2e (tol 1e-10); correlated 4-electron ground states: "
              "rank-2 errors %.3f %.3f %.3f %.3f, rank-3 errors %.3f %.3f %.3f %.3f (reported)",
              n_hf, worst_hf, corr2[0], corr2[1], corr2[2], corr2[3], corr3[0], corr3[1], corr3[2], corr3[3])};
}

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

Outcome criterion8() {
  double e_err = 0.0, resid = 0.0;
  int states = 0;
  for (const auto& p : grid()) {
    e_err = std::max(e_err, p.rdm_energy_error);
    resid = std::max(resid, p.max_residual);
    states += 6;
  }
  std::mt19937_64 rng(1008);
  double tr_err = 0.0;
  for (int ne : {2, 3, 4}) {
    const auto mo = test::random_integrals(4, rng);
    const auto gs = fci::ground_state(fci::HamiltonianAction(mo), ne);
    e_err = std::max(e_err, std::abs(rdm::energy_from_rdms(mo, rdm::compute_rdm(gs.wavefunction, 1),
                                                          rdm::compute_rdm(gs.wavefunction, 2)) -
                                     gs.energy));
    ++states;
    for (const auto& psi : {gs.wavefunction, test::random_state(8, ne, rng)}) {
      const auto set = rdm::RdmSet::compute(psi, 4);
      for (int k = 1; k <= 4; ++k) {
        const auto& d = set.get(k);
        const double expect = k > ne ? 0.0 : factorial(ne) / factorial(ne - k);
        tr_err = std::max(tr_err, std::abs(d.trace() - expect));
        if (k >= 2 && k <= ne)
          tr_err = std::max(tr_err, (rdm::partial_trace(d).matrix() - double(ne - k + 1) * set.get(k - 1).matrix())
                                        .cwiseAbs()
                                        .maxCoeff());
      }
    }
  }
  return {e_err <= 1e-10 && tr_err <= 1e-9,
          fmt("%d ground states (max residual %.1e): max |E(RDM) - E_FCI| %.2e (tol 1e-10); trace identities %.2e "
              "(tol 1e-9)",
              states, resid, e_err, tr_err)};
}

Outcome criterion9() {
  const auto ref = test::load_json("h2_reference.json");
  double worst = 0.0;
  std::string where;
  auto track = [&](double v, double oracle, const std::string& what) {
    if (std::abs(v - oracle) > worst) worst = std::abs(v - oracle), where = what;
  };
  for (auto [b, tag, file] : {std::tuple{"sto-3g", "sto3g", "h2_sto3g_r1.4.fcidump"},
                              {"6-31g", "631g", "h2_631g_r1.4.fcidump"}, {"cc-pvdz", "ccpvdz", "h2_ccpvdz_r1.4.fcidump"}}) {
    const auto sys = vqse::prepare_system(integrals::Geometry::diatomic("H", "H", 1.4), basis(b));
    track(sys.scf.scf_energy, ref[tag]["e_rhf"].get<double>(), std::string(b) + " RHF");
    track(vqse::full_fci(sys.mo, 2).energy, ref[tag]["e_fci"].get<double>(), std::string(b) + " FCI");
    const auto dump = integrals::read_fcidump(test::data_path(file));
    track(vqse::full_fci(dump.integrals, 2).energy, ref[tag]["e_fci"].get<double>(), std::string(file) + " FCI");
  }
  for (const auto& p : grid()) {
    const std::string at = fmt(" R=%.1f", p.r);
    track(p.rhf_sto3g, p.oracle["sto3g_rhf"].get<double>(), "sto-3g RHF" + at);
    track(p.fci_sto3g, p.oracle["sto3g_fci"].get<double>(), "sto-3g FCI" + at);
    track(p.rhf_631g, p.oracle["631g_rhf"].get<double>(), "6-31g RHF" + at);
    track(p.fci_631g, p.oracle["631g_fci"].get<double>(), "6-31g FCI" + at);
    track(p.rhf_vdz, p.oracle["ccpvdz_rhf"].get<double>(), "cc-pvdz RHF" + at);
    track(p.fci_vdz, p.oracle["ccpvdz_fci"].get<double>(), "cc-pvdz FCI" + at);
  }
  return {worst <= 1e-6, fmt("max deviation from the reference package %.2e (%s) (tol 1e-6)", worst, where.c_str())};
}

Outcome criterion10() {
  const auto sys = h2("6-31g", 1.0);
  const auto part = two_active(sys.mo.n_spatial);
  const double shots[] = {1e4, 1e6, 1e8};
  const int seeds = 100;
  std::vector<double> lx, ly;
  std::string scatter;
  for (double n : shots) {
    std::vector<double> e;
    for (int s = 0; s < seeds; ++s) {
      vqse::VqseOptions opt;
      opt.shots = n;
      opt.seed = static_cast<std::uint64_t>(s);
      opt.epsilon = vqse::kNoisyEpsilon;
      e.push_back(vqse::run_vqse(sys.mo, part, 2, opt).e_vqse);
    }
    double mean = std::accumulate(e.begin(), e.end(), 0.0) / seeds, var = 0.0;
    for (double x : e) var += (x - mean) * (x - mean);
    const double sd = std::sqrt(var / (seeds - 1));
    lx.push_back(std::log10(n));
    ly.push_back(std::log10(sd));
    scatter += fmt(" %.0e:%.2e", n, sd);
  }
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / 3, my = std::accumulate(ly.begin(), ly.end(), 0.0) / 3;
  double sxy = 0.0, sxx = 0.0;
  for (int k = 0; k < 3; ++k) sxy += (lx[k] - mx) * (ly[k] - my), sxx += (lx[k] - mx) * (lx[k] - mx);
  const double slope = sxy / sxx;

  // Threshold sweep on one noisy subspace: retained dimension and energy.
  vqse::VqseOptions noisy;
  noisy.shots = 1e6;
  noisy.seed = 7;
  noisy.epsilon = vqse::kNoisyEpsilon;
  const auto pair = vqse::run_vqse(sys.mo, part, 2, noisy).subspace;
  int last = std::numeric_limits<int>::max(), bad = 0;
  std::string dims;
  for (double eps : {1e-8, 1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2}) {
    const auto sol = vqse::solve_gevp(pair, eps);
    bad += sol.retained > last;
    last = sol.retained;
    dims += fmt(" %.0e:%d:%.6f", eps, sol.retained, sol.energies(0));
  }
  return {std::abs(slope + 0.5) <= 0.1 && bad == 0,
          fmt("6-31G R=1.0 A, eps 1e-3, %d seeds (shots:sd)%s, log-log slope %.3f (want -0.5 +- 0.1); "
              "noisy eps sweep (eps:retained:E)%s, %d increases in retained dimension",
              seeds, scatter.c_str(), slope, dims.c_str(), bad)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  bool report = false;
  std::vector<int> only;
  app.add_flag("--report", report, "print every line and exit 0 regardless of outcome");
  app.add_option("--only", only, "criteria to run (default all)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                           criterion6, criterion7, criterion8, criterion9, criterion10};
  const std::set<int> chosen(only.begin(), only.end());
  int failed = 0;
  for (int k = 1; k <= 10; ++k) {
    if (!chosen.empty() && !chosen.count(k)) continue;
    Outcome o;
    try {
      o = criteria[k - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %2d: %s  %s\n", k, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %s criteria failed\n", failed, chosen.empty() ? "10" : std::to_string(chosen.size()).c_str());
  return report ? 0 : (failed ? 1 : 0);
}
