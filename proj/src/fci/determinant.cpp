#include "qse/fci/determinant.hpp"

#include <string>

#include "qse/errors.hpp"
#include "qse/integrals/mo_integrals.hpp"

namespace qse::fci {

OperatorString adjoint(std::span<const LadderOp> ops) {
  OperatorString out(ops.rbegin(), ops.rend());
  for (auto& op : out) op.dagger = !op.dagger;
  return out;
}

LadderResult apply_ladder_string(std::span<const LadderOp> ops, Determinant det, int n_spin_orbitals) {
  int sign = 1;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    const int i = it->index;
    if (i < 0 || i >= n_spin_orbitals || i >= kMaxSpinOrbitals) {
      throw DomainError("ladder operator index " + std::to_string(i) + " out of range");
    }
    if (det.occupied(i) == it->dagger) return {0, det};
    if (det.count_below(i) % 2) sign = -sign;
    det.bits ^= std::uint64_t{1} << i;
  }
  return {sign, det};
}

void SecondQuantizedOperator::validate() const {
  for (const auto& t : terms) {
    for (const auto& op : t.ops) {
      if (op.index < 0 || op.index >= n_spin_orbitals) throw DomainError("operator index outside declared orbital count");
    }
  }
}

SecondQuantizedOperator SecondQuantizedOperator::from_integrals(const integrals::MolecularIntegrals& mo) {
  SecondQuantizedOperator op;
  const int n = mo.n_spin_orbitals();
  op.n_spin_orbitals = n;
  op.terms.push_back({mo.constant_energy(), {}});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double h = mo.one_body(i, j);
      if (h != 0.0) op.terms.push_back({h, {cre(i), ann(j)}});
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double h = mo.two_body(i, j, k, l);
          if (h != 0.0) op.terms.push_back({0.5 * h, {cre(i), cre(j), ann(k), ann(l)}});
        }
  return op;
}

Sector::Sector(int n_spin_orbitals, int n_electrons, std::optional<int> sz2)
    : n_spin_orbitals_(n_spin_orbitals), n_electrons_(n_electrons) {
  if (n_spin_orbitals < 0 || n_spin_orbitals > kMaxSpinOrbitals - 1) throw DomainError("unsupported spin-orbital count");
  if (n_electrons < 0 || n_electrons > n_spin_orbitals) throw DomainError("electron count outside [0, n_spin_orbitals]");
  const std::uint64_t limit = std::uint64_t{1} << n_spin_orbitals;
  auto accept = [&](std::uint64_t bits) {
    Determinant d{bits};
    if (!sz2 || d.sz2() == *sz2) {
      lookup_.emplace(d, dets_.size());
      dets_.push_back(d);
    }
  };
  if (n_electrons == 0) {
    accept(0);
    return;
  }
  // Gosper's hack visits every n_electrons-subset in increasing order.
  std::uint64_t v = (std::uint64_t{1} << n_electrons) - 1;
  while (v < limit) {
    accept(v);
    const std::uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
  }
}

std::optional<std::size_t> Sector::index_of(Determinant d) const {
  auto it = lookup_.find(d);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

}  // namespace qse::fci
