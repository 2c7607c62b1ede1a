#include "qse/integrals/mo_integrals.hpp"

#include <cmath>
#include <string>

#include "qse/errors.hpp"
#include "qse/kernels/kernels.hpp"

namespace qse::integrals {

void MolecularIntegrals::validate(double tol) const {
  if (h1.rows() != n_spatial || h1.cols() != n_spatial) throw ShapeError("h1 dimension differs from n_spatial");
  if (eri.dim() != n_spatial) throw ShapeError("eri dimension differs from n_spatial");
  const double h_asym = (h1 - h1.transpose()).cwiseAbs().maxCoeff();
  if (n_spatial > 0 && h_asym > tol) throw DomainError("h1 not symmetric (" + std::to_string(h_asym) + ")");
  const double e_asym = eri.symmetry_violation();
  if (e_asym > tol) throw DomainError("eri lacks 8-fold symmetry (" + std::to_string(e_asym) + ")");
}

MolecularIntegrals MolecularIntegrals::restricted_to(std::span<const int> orbitals) const {
  const int m = static_cast<int>(orbitals.size());
  MolecularIntegrals out;
  out.n_spatial = m;
  out.e_nuc = e_nuc;
  out.core_energy_shift = core_energy_shift;
  out.h1.resize(m, m);
  out.eri = EriTensor(m);
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      out.h1(p, q) = h1(orbitals[p], orbitals[q]);
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) out.eri(p, q, r, s) = eri(orbitals[p], orbitals[q], orbitals[r], orbitals[s]);
    }
  }
  return out;
}

EriTensor transform_eri(const EriTensor& eri, const Eigen::MatrixXd& coeffs) {
  const std::size_t n = eri.dim();
  if (static_cast<std::size_t>(coeffs.rows()) != n) throw ShapeError("transform_eri: coefficient rows != basis size");
  const std::size_t m = coeffs.cols();
  const std::size_t n2 = n * n, n3 = n2 * n;
  const auto& src = eri.data();

  // (mu nu|la si) -> (p nu|la si)
  std::vector<double> t1(m * n3, 0.0);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t mu = 0; mu < n; ++mu) {
      const double c = coeffs(mu, p);
      if (c == 0.0) continue;
      kernels::axpy(c, std::span(src).subspan(mu * n3, n3), std::span(t1).subspan(p * n3, n3));
    }
  // -> (p q|la si)
  std::vector<double> t2(m * m * n2, 0.0);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t nu = 0; nu < n; ++nu) {
        const double c = coeffs(nu, q);
        if (c == 0.0) continue;
        kernels::axpy(c, std::span(t1).subspan(p * n3 + nu * n2, n2), std::span(t2).subspan((p * m + q) * n2, n2));
      }
  t1.clear();
  t1.shrink_to_fit();
  // -> (p q|r si)
  std::vector<double> t3(m * m * m * n, 0.0);
  for (std::size_t pq = 0; pq < m * m; ++pq)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t la = 0; la < n; ++la) {
        const double c = coeffs(la, r);
        if (c == 0.0) continue;
        kernels::axpy(c, std::span(t2).subspan(pq * n2 + la * n, n), std::span(t3).subspan((pq * m + r) * n, n));
      }
  t2.clear();
  t2.shrink_to_fit();
  // -> (p q|r s); rows of coeffs are needed contiguously here.
  std::vector<double> rows(n * m);
  for (std::size_t si = 0; si < n; ++si)
    for (std::size_t s = 0; s < m; ++s) rows[si * m + s] = coeffs(si, s);
  EriTensor out(static_cast<int>(m));
  auto& dst = out.data();
  for (std::size_t pqr = 0; pqr < m * m * m; ++pqr)
    for (std::size_t si = 0; si < n; ++si) {
      const double c = t3[pqr * n + si];
      if (c == 0.0) continue;
      kernels::axpy(c, std::span<const double>(rows).subspan(si * m, m), std::span(dst).subspan(pqr * m, m));
    }
  return out;
}

namespace {

void check_coefficients(const Eigen::MatrixXd& c, int n) {
  if (c.rows() != n || c.cols() != n) {
    throw ShapeError("coefficient matrix is " + std::to_string(c.rows()) + "x" + std::to_string(c.cols()) +
                     ", expected " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (n > 0 && Eigen::FullPivLU<Eigen::MatrixXd>(c).rank() < n) throw DomainError("coefficient matrix is rank deficient");
}

}  // namespace

MolecularIntegrals transform_to_mo(const AoIntegrals& ao, const Eigen::MatrixXd& coeffs) {
  const int n = ao.n_basis();
  check_coefficients(coeffs, n);
  MolecularIntegrals mo;
  mo.n_spatial = n;
  mo.e_nuc = ao.e_nuc;
  mo.h1 = coeffs.transpose() * ao.core_hamiltonian() * coeffs;
  mo.h1 = 0.5 * (mo.h1 + mo.h1.transpose()).eval();
  mo.eri = transform_eri(ao.eri, coeffs);
  return mo;
}

MolecularIntegrals rotate_orbitals(const MolecularIntegrals& mo, const Eigen::MatrixXd& rotation) {
  check_coefficients(rotation, mo.n_spatial);
  MolecularIntegrals out = mo;
  out.h1 = rotation.transpose() * mo.h1 * rotation;
  out.eri = transform_eri(mo.eri, rotation);
  return out;
}

DressedIntegrals dress_core(const MolecularIntegrals& mo, const OrbitalPartition& partition) {
  partition.validate(mo.n_spatial);
  DressedIntegrals out;
  out.kept = partition.active;
  out.kept.insert(out.kept.end(), partition.virtuals.begin(), partition.virtuals.end());

  const auto& core = partition.core;
  double e_core = 0.0;
  for (int c : core) {
    e_core += 2.0 * mo.h1(c, c);
    for (int d : core) e_core += 2.0 * mo.eri(c, c, d, d) - mo.eri(c, d, d, c);
  }

  out.integrals = mo.restricted_to(out.kept);
  out.integrals.core_energy_shift = mo.core_energy_shift + e_core;
  const int m = static_cast<int>(out.kept.size());
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      const int op = out.kept[p], oq = out.kept[q];
      double f = 0.0;
      for (int c : core) f += 2.0 * mo.eri(op, oq, c, c) - mo.eri(op, c, c, oq);
      out.integrals.h1(p, q) += f;
    }
  }

  const int n_act = static_cast<int>(partition.active.size());
  for (int i = 0; i < m; ++i) (i < n_act ? out.partition.active : out.partition.virtuals).push_back(i);
  if (partition.active_excited) {
    std::vector<int> excited;
    for (int p : *partition.active_excited) {
      for (int i = 0; i < n_act; ++i)
        if (partition.active[i] == p) excited.push_back(i);
    }
    out.partition.active_excited = excited;
  }
  return out;
}

}  // namespace qse::integrals
