#include "qse/fci/hamiltonian.hpp"

#include "qse/errors.hpp"

namespace qse::fci {

HamiltonianAction::HamiltonianAction(const integrals::MolecularIntegrals& mo) {
  mo.validate(1e-10);
  n_ = mo.n_spin_orbitals();
  if (n_ >= kMaxSpinOrbitals) throw DomainError("too many spin orbitals for a 64-bit determinant");
  constant_ = mo.constant_energy();
  h1_.assign(static_cast<std::size_t>(n_) * n_, 0.0);
  h2_.assign(static_cast<std::size_t>(n_) * n_ * n_ * n_, 0.0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) h1_[i * n_ + j] = mo.one_body(i, j);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l) h2_[((i * n_ + j) * n_ + k) * n_ + l] = mo.two_body(i, j, k, l);
}

namespace {

int collect(std::uint64_t bits, int n, int* out) {
  int c = 0;
  for (int i = 0; i < n; ++i)
    if ((bits >> i) & 1u) out[c++] = i;
  return c;
}

}  // namespace

double HamiltonianAction::diagonal(Determinant d) const {
  int occ[kMaxSpinOrbitals];
  const int no = collect(d.bits, n_, occ);
  double e = constant_;
  for (int a = 0; a < no; ++a) {
    const int i = occ[a];
    e += h1(i, i);
    for (int b = a + 1; b < no; ++b) {
      const int j = occ[b];
      e += h2(i, j, j, i) - h2(i, j, i, j);
    }
  }
  return e;
}

void HamiltonianAction::for_each_connected(Determinant d, const std::function<void(Determinant, double)>& f) const {
  int occ[kMaxSpinOrbitals], vir[kMaxSpinOrbitals];
  const std::uint64_t mask = n_ == 0 ? 0 : (~std::uint64_t{0} >> (64 - n_));
  const int no = collect(d.bits, n_, occ);
  const int nv = collect(~d.bits & mask, n_, vir);
  f(d, diagonal(d));

  // Singles i -> a.
  for (int x = 0; x < no; ++x) {
    const int i = occ[x];
    for (int y = 0; y < nv; ++y) {
      const int a = vir[y];
      if ((i ^ a) & 1) continue;  // spin flip
      double v = h1(a, i);
      for (int z = 0; z < no; ++z) {
        const int j = occ[z];
        if (j == i) continue;
        v += h2(a, j, j, i) - h2(a, j, i, j);
      }
      if (v == 0.0) continue;
      const LadderOp ops[] = {cre(a), ann(i)};
      const auto r = apply_ladder_string(ops, d, n_);
      f(r.det, r.sign * v);
    }
  }

  // Doubles (i<j) -> (a<b).
  for (int x = 0; x < no; ++x)
    for (int x2 = x + 1; x2 < no; ++x2) {
      const int i = occ[x], j = occ[x2];
      for (int y = 0; y < nv; ++y)
        for (int y2 = y + 1; y2 < nv; ++y2) {
          const int a = vir[y], b = vir[y2];
          if (((i & 1) + (j & 1)) != ((a & 1) + (b & 1))) continue;
          const double v = h2(a, b, j, i) - h2(a, b, i, j);
          if (v == 0.0) continue;
          const LadderOp ops[] = {cre(a), cre(b), ann(j), ann(i)};
          const auto r = apply_ladder_string(ops, d, n_);
          f(r.det, r.sign * v);
        }
    }
}

Wavefunction HamiltonianAction::apply(const Wavefunction& psi) const {
  if (psi.n_spin_orbitals() != n_) throw ShapeError("wavefunction and Hamiltonian orbital counts differ");
  Wavefunction out(n_, psi.n_electrons());
  for (const auto& [d, c] : psi) {
    for_each_connected(d, [&](Determinant e, double v) { out.add(e, v * c); });
  }
  return out;
}

Eigen::MatrixXd HamiltonianAction::dense_matrix(const Sector& sector) const {
  if (sector.n_spin_orbitals() != n_) throw ShapeError("sector and Hamiltonian orbital counts differ");
  const auto dim = static_cast<Eigen::Index>(sector.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    for_each_connected(sector[col], [&](Determinant e, double v) {
      if (auto row = sector.index_of(e)) h(static_cast<Eigen::Index>(*row), col) += v;
    });
  }
  return h;
}

void HamiltonianAction::apply(const Sector& sector, const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
  const auto dim = static_cast<Eigen::Index>(sector.size());
  if (x.size() != dim) throw ShapeError("vector length differs from sector size");
  y = Eigen::VectorXd::Zero(dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const double xc = x(col);
    if (xc == 0.0) continue;
    for_each_connected(sector[col], [&](Determinant e, double v) {
      if (auto row = sector.index_of(e)) y(static_cast<Eigen::Index>(*row)) += v * xc;
    });
  }
}

}  // namespace qse::fci
