#pragma once

#include <complex>
#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "qse/fci/wavefunction.hpp"
#include "qse/integrals/mo_integrals.hpp"
#include "qse/integrals/partition.hpp"

namespace qse::test {

inline std::filesystem::path data_path(const std::string& name) { return std::filesystem::path(QSE_TEST_DATA_DIR) / name; }

inline nlohmann::json load_json(const std::string& name) {
  std::ifstream in(data_path(name));
  return nlohmann::json::parse(in);
}

/// Normalized random state over every determinant of the sector.
inline fci::Wavefunction random_state(int n_so, int n_electrons, std::mt19937_64& rng, bool complex_amplitudes = true,
                                      std::optional<int> sz2 = std::nullopt) {
  std::normal_distribution<double> g;
  fci::Wavefunction psi(n_so, n_electrons);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n_so); ++bits) {
    const fci::Determinant d{bits};
    if (d.n_electrons() != n_electrons) continue;
    if (sz2 && d.sz2() != *sz2) continue;
    psi.set(d, {g(rng), complex_amplitudes ? g(rng) : 0.0});
  }
  psi.normalize();
  return psi;
}

/// Places a state over the (sorted) active spin orbitals into the full
/// space with the listed core spin orbitals occupied.
inline fci::Wavefunction embed(const fci::Wavefunction& local, const integrals::SpinPartition& sp) {
  std::uint64_t core = 0;
  for (int c : sp.core) core |= std::uint64_t{1} << c;
  fci::Wavefunction out(sp.n_spin_orbitals, local.n_electrons() + static_cast<int>(sp.core.size()));
  for (const auto& [d, c] : local) {
    std::uint64_t bits = core;
    for (int l = 0; l < local.n_spin_orbitals(); ++l)
      if (d.occupied(l)) bits |= std::uint64_t{1} << sp.active[l];
    out.set(fci::Determinant{bits}, c);
  }
  return out;
}

/// Random real integrals with the full eight-fold symmetry.
inline integrals::MolecularIntegrals random_integrals(int n, std::mt19937_64& rng, double scale = 0.3) {
  std::normal_distribution<double> g;
  integrals::MolecularIntegrals mo;
  mo.n_spatial = n;
  mo.e_nuc = g(rng);
  mo.h1 = Eigen::MatrixXd::Zero(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q) mo.h1(p, q) = mo.h1(q, p) = g(rng) - (p == q ? 1.0 : 0.0);
  mo.eri = integrals::EriTensor(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s <= r; ++s)
          if (p * (p + 1) / 2 + q >= r * (r + 1) / 2 + s) mo.eri.set_symmetric(p, q, r, s, scale * g(rng));
  return mo;
}

/// Random orthogonal matrix (QR of a Gaussian matrix).
inline Eigen::MatrixXd random_orthogonal(int n, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = scale * g(rng);
  Eigen::MatrixXd t = 0.5 * (a - a.transpose());
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(Eigen::MatrixXd::Identity(n, n) + t);
  Eigen::MatrixXd q = qr.householderQ();
  for (int j = 0; j < n; ++j)
    if (qr.matrixQR()(j, j) < 0) q.col(j) *= -1.0;
  return q;
}

}  // namespace qse::test
