#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qse/errors.hpp"
#include "qse/integrals/basis.hpp"
#include "qse/oo/energy.hpp"
#include "qse/oo/givens.hpp"
#include "qse/oo/joint.hpp"
#include "qse/oo/mcscf.hpp"
#include "qse/oo/rotation.hpp"
#include "qse/rdm/rdm.hpp"
#include "qse/units.hpp"
#include "qse/vqse/pipeline.hpp"
#include "support.hpp"

using namespace qse;
using namespace qse::oo;

namespace {

rdm::SpatialRdms random_spatial_rdms(int n, int ne, std::mt19937_64& rng) {
  const auto psi = test::random_state(2 * n, ne, rng, false);
  const auto set = rdm::RdmSet::compute(psi, 2);
  return rdm::spin_summed(set.get(1), set.get(2));
}

// Rotated-orbital energy by literal index sums.
double energy_by_loops(const Eigen::MatrixXd& u, const integrals::MolecularIntegrals& mo, const rdm::SpatialRdms& d) {
  const int n = mo.n_spatial;
  double e = mo.constant_energy();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      double h = 0.0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) h += u(a, p) * mo.h1(a, b) * u(b, q);
      e += h * d.gamma(p, q);
    }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double g = 0.0;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              for (int c = 0; c < n; ++c)
                for (int f = 0; f < n; ++f) g += u(a, p) * u(b, q) * u(c, r) * u(f, s) * mo.eri(a, b, c, f);
          e += 0.5 * g * d.Gamma_at(p, q, r, s);
        }
  return e;
}

Eigen::MatrixXd random_rotation(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 0.7);
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      t(q, p) = g(rng);
      t(p, q) = -t(q, p);
    }
  return unitary_from_generator(t);
}

const integrals::BasisSet& b631g() {
  static const auto b = integrals::BasisSet::load_named("6-31g");
  return b;
}

}  // namespace

TEST_SUITE("oo") {

TEST_CASE("Givens factors, generators and angle wrapping") {
  const auto g = givens_matrix(4, {1, 3}, 0.3);
  CHECK(g(1, 1) == doctest::Approx(std::cos(0.3)));
  CHECK(g(1, 3) == doctest::Approx(-std::sin(0.3)));
  CHECK(g(3, 1) == doctest::Approx(std::sin(0.3)));
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(4, 4);
  t(3, 1) = 0.3;
  t(1, 3) = -0.3;
  CHECK((unitary_from_generator(t) - g).cwiseAbs().maxCoeff() < 1e-14);
  t(1, 3) = 0.0;
  CHECK_THROWS_AS(unitary_from_generator(t), DomainError);

  CHECK(wrap_angle(std::numbers::pi) == doctest::Approx(std::numbers::pi));
  CHECK(wrap_angle(-std::numbers::pi) == doctest::Approx(std::numbers::pi));
  CHECK(wrap_angle(7.0) == doctest::Approx(7.0 - 2 * std::numbers::pi));

  auto r = RotationParameters::identity(4);
  r.append({0, 2}, 0.4);
  r.append({1, 3}, -1.1);
  CHECK((r.unitary() - givens_matrix(4, {0, 2}, 0.4) * givens_matrix(4, {1, 3}, -1.1)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(unitarity_violation(r.unitary()) < 1e-14);
}

TEST_CASE("non-redundant pairs") {
  integrals::OrbitalPartition part;
  part.core = {0};
  part.active = {3, 1};
  part.virtuals = {4, 2};
  const auto pairs = rotation_pairs(part);
  const std::vector<OrbitalPair> expect{{1, 0}, {1, 2}, {1, 4}, {3, 0}, {3, 2}, {3, 4}};
  CHECK(pairs == expect);
  CHECK(rotation_pairs(part, true).size() == 7);
  CHECK(rotation_pairs(part, true).back() == OrbitalPair{1, 3});
}

TEST_CASE("rotated energy: identity, integral route, RDM route and loops") {
  std::mt19937_64 rng(51);
  const int n = 4;
  const auto mo = test::random_integrals(n, rng);
  const auto d = random_spatial_rdms(n, 3, rng);
  const auto ident = Eigen::MatrixXd::Identity(n, n);
  CHECK(energy_of_rotation(ident, mo, d) == doctest::Approx(rdm::contract_energy(mo, d)).epsilon(1e-14));
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = random_rotation(n, rng);
    const double a = energy_of_rotation(u, mo, d);
    worst = std::max(worst, std::abs(a - energy_of_rotation_rdm_route(u, mo, d)));
    if (trial < 5) CHECK(a == doctest::Approx(energy_by_loops(u, mo, d)).epsilon(1e-12));
  }
  CHECK(worst < 1e-12);

  Eigen::MatrixXd bad = ident;
  bad(0, 0) = 1.0 + 1e-6;
  CHECK_THROWS_AS(energy_of_rotation(bad, mo, d), UnitarityError);
  CHECK_THROWS_AS(energy_of_rotation_rdm_route(bad, mo, d), UnitarityError);
  bad(0, 0) = 1.0 + 1e-10;
  CHECK_NOTHROW(energy_of_rotation(bad, mo, d));
}

TEST_CASE("trigonometric fit is exact and its minimizer is global") {
  std::mt19937_64 rng(52);
  const int n = 4;
  const auto mo = test::random_integrals(n, rng, 0.5);
  const auto d = random_spatial_rdms(n, 2, rng);
  for (const OrbitalPair pair : {OrbitalPair{0, 2}, OrbitalPair{1, 3}, OrbitalPair{0, 1}}) {
    auto f = [&](double t) { return energy_of_rotation(givens_matrix(n, pair, t), mo, d); };
    const auto poly = TrigPolynomial::fit(f);
    std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const double t = ang(rng);
      worst = std::max(worst, std::abs(poly(t) - f(t)));
    }
    CHECK(worst < 1e-10);
    // Derivatives against central differences.
    const double t0 = 0.37, h = 1e-4;
    CHECK(poly.derivative(t0) == doctest::Approx((poly(t0 + h) - poly(t0 - h)) / (2 * h)).epsilon(1e-6));
    CHECK(poly.second_derivative(t0) ==
          doctest::Approx((poly(t0 + h) - 2 * poly(t0) + poly(t0 - h)) / (h * h)).epsilon(1e-4));

    double scan_min = f(0.0);
    for (int k = 0; k < 100000; ++k) scan_min = std::min(scan_min, f(-std::numbers::pi + 2 * std::numbers::pi * k / 100000));
    const double tmin = poly.argmin();
    CHECK(f(tmin) <= scan_min + 1e-10);
    CHECK(std::abs(poly.derivative(tmin)) < 1e-9);
  }
}

TEST_CASE("local angle search stays in the basin of zero") {
  TrigPolynomial f;
  f.a[1] = 0.5;   // two wells, at +-pi/2
  f.b[0] = -0.1;  // the well at +pi/2 is deeper
  f.a[0] = 0.2;
  const double g = f.argmin(), l = f.local_argmin();
  CHECK(f(g) <= f(l) + 1e-14);
  CHECK(std::abs(f.derivative(l)) < 1e-10);
  CHECK(f.second_derivative(l) > 0.0);
  // Downhill all the way from 0 to the local minimizer.
  for (int k = 1; k <= 1000; ++k) CHECK(f(l * k / 1000.0) <= f(l * (k - 1) / 1000.0) + 1e-15);
  TrigPolynomial flat;
  flat.a0 = 1.0;
  CHECK(flat.local_argmin() == 0.0);
}

TEST_CASE("Givens sweep on stretched H2 in 6-31G") {
  const auto sys = vqse::prepare_system(integrals::Geometry::diatomic("H", "H", units::angstrom_to_bohr(2.0)), b631g());
  const auto part = integrals::OrbitalPartition::from_counts(0, 2, -1, 4);
  const auto ref = active_reference(sys.mo, part, 2);
  const auto relax = givens_sweep(sys.mo, ref.spatial, part);
  const auto& trace = relax.report.energy_trace;
  REQUIRE(trace.size() >= 2);
  CHECK(trace.front() == doctest::Approx(ref.energy).epsilon(1e-12));
  for (std::size_t k = 1; k < trace.size(); ++k) CHECK(trace[k] <= trace[k - 1] + 1e-14);
  CHECK(relax.report.final_energy < ref.energy);
  CHECK(relax.report.converged);
  // A rotated CAS state is still a state: bounded by the full FCI energy.
  const double e_fci = vqse::full_fci(sys.mo, 2).energy;
  CHECK(relax.report.final_energy >= e_fci - 1e-10);
  // The reported energy is reproduced by the returned rotation.
  const auto u = relax.rotation.unitary();
  CHECK(unitarity_violation(u) < 1e-12);
  CHECK(energy_of_rotation(u, sys.mo, ref.spatial) == doctest::Approx(relax.report.final_energy).epsilon(1e-12));
  for (const auto& a : relax.report.angles) CHECK(a.theta > -std::numbers::pi - 1e-15);

  std::ostringstream os;
  relax.report.write_text(os);
  CHECK(os.str().find("final_energy") != std::string::npos);
  CHECK(os.str().find("# sweep p q theta energy") != std::string::npos);
}

TEST_CASE("joint optimization") {
  const auto sys = vqse::prepare_system(integrals::Geometry::diatomic("H", "H", units::angstrom_to_bohr(1.6)), b631g());
  const auto part = integrals::OrbitalPartition::from_counts(0, 2, -1, 4);
  const auto ref = active_reference(sys.mo, part, 2);
  const auto sweep = givens_sweep(sys.mo, ref.spatial, part);

  JointOptions none;
  none.budget = 0;
  const auto frozen = joint_optimize(sys.mo, ref.spatial, part, sweep.rotation, none);
  CHECK(frozen.report.budget_exhausted);
  CHECK(frozen.report.final_energy == doctest::Approx(sweep.report.final_energy).epsilon(1e-13));

  const auto joint = joint_optimize(sys.mo, ref.spatial, part, sweep.rotation);
  CHECK(joint.report.final_energy <= sweep.report.final_energy + 1e-13);
  CHECK(sweep.report.final_energy - joint.report.final_energy < 1e-8);
  CHECK(joint.report.evaluations <= 5000);
  CHECK(energy_of_rotation(joint.rotation.unitary(), sys.mo, ref.spatial) ==
        doctest::Approx(joint.report.final_energy).epsilon(1e-12));

  const auto polish = relax_once(sys.mo, part, 2, RelaxMode::SweepThenJoint);
  CHECK(polish.relaxed_energy <= sweep.report.final_energy + 1e-13);
  const auto fresh = relax_once(sys.mo, part, 2, RelaxMode::Joint);
  CHECK(fresh.relaxed_energy < fresh.active_energy);
  CHECK(fresh.relaxation.report.initial_energy == doctest::Approx(ref.energy).epsilon(1e-12));
}

TEST_CASE("alternating relaxation and re-solve") {
  const auto sys = vqse::prepare_system(integrals::Geometry::diatomic("H", "H", units::angstrom_to_bohr(2.0)), b631g());
  const auto part = integrals::OrbitalPartition::from_counts(0, 2, -1, 4);
  const auto one = relax_once(sys.mo, part, 2);
  const auto c1 = relax_then_resolve(sys.mo, part, 2, 1);
  REQUIRE(c1.cycles.size() == 1);
  CHECK(c1.cycles[0].active_energy == doctest::Approx(one.active_energy).epsilon(1e-13));
  CHECK(c1.energy == doctest::Approx(one.relaxed_energy).epsilon(1e-12));

  // Re-solving in the relaxed orbitals can only lower the energy.
  const auto rotated = integrals::rotate_orbitals(sys.mo, c1.rotation);
  CHECK(active_reference(rotated, part, 2).energy <= c1.energy + 1e-12);

  const auto c10 = relax_then_resolve(sys.mo, part, 2, 10);
  CHECK(c10.energy <= one.relaxed_energy + 1e-12);
  for (std::size_t k = 1; k < c10.cycles.size(); ++k)
    CHECK(c10.cycles[k].relaxed_energy <= c10.cycles[k - 1].relaxed_energy + 1e-12);
  CHECK(c10.energy >= vqse::full_fci(sys.mo, 2).energy - 1e-10);
  CHECK_THROWS_AS(relax_then_resolve(sys.mo, part, 2, 0), DomainError);

  // At the converged orbitals a local sweep finds nothing left to do.
  SweepOptions local;
  local.angle_search = AngleSearch::Local;
  const auto conv = relax_then_resolve(sys.mo, part, 2, 200, local, 1e-13);
  const auto at = integrals::rotate_orbitals(sys.mo, conv.rotation);
  const auto again = givens_sweep(at, active_reference(at, part, 2).spatial, part, local);
  for (const auto& a : again.report.angles) CHECK(std::abs(a.theta) < 1e-6);
  CHECK(again.report.final_energy == doctest::Approx(conv.energy).epsilon(1e-10));

  // Complete active space: nothing to rotate, FCI is already optimal.
  const auto full = integrals::OrbitalPartition::from_counts(0, 4, 0, 4);
  const auto idem = relax_then_resolve(sys.mo, full, 2, 3);
  CHECK(idem.energy == doctest::Approx(vqse::full_fci(sys.mo, 2).energy).epsilon(1e-11));
  CHECK((idem.rotation - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("converged relaxation reproduces the reference package CASSCF energies") {
  // Points where sweeps from the RHF orbitals reach the same minimum as the
  // reference package.
  for (const auto& row : test::load_json("h2_631g_casscf.json")) {
    const double r = row["r_angstrom"].get<double>();
    if (r != 1.0 && r != 1.5 && r != 2.0 && r != 2.5) continue;
    CAPTURE(r);
    const auto sys = vqse::prepare_system(integrals::Geometry::diatomic("H", "H", units::angstrom_to_bohr(r)), b631g());
    const auto c = relax_then_resolve(sys.mo, integrals::OrbitalPartition::from_counts(0, 2, -1, 4), 2, 300, {}, 1e-13);
    CHECK(c.energy == doctest::Approx(row["cas2"].get<double>()).epsilon(1e-8));
  }
}

}
