#pragma once

#include <bit>
#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace qse::integrals {
struct MolecularIntegrals;
}

namespace qse::fci {

inline constexpr int kMaxSpinOrbitals = 64;

/// Occupation bitmask: bit i set <=> spin orbital i occupied.
struct Determinant {
  std::uint64_t bits = 0;

  bool occupied(int i) const { return (bits >> i) & 1u; }
  int n_electrons() const { return std::popcount(bits); }
  /// Number of occupied spin orbitals with index below i.
  int count_below(int i) const {
    return i == 0 ? 0 : std::popcount(bits & ((std::uint64_t{1} << i) - 1));
  }
  /// Twice the S_z quantum number (even bits alpha, odd bits beta).
  int sz2() const {
    constexpr std::uint64_t kAlpha = 0x5555555555555555ull;
    return std::popcount(bits & kAlpha) - std::popcount(bits & ~kAlpha);
  }
  auto operator<=>(const Determinant&) const = default;
};

struct DeterminantHash {
  std::size_t operator()(const Determinant& d) const noexcept { return std::hash<std::uint64_t>{}(d.bits); }
};

struct LadderOp {
  int index = 0;
  bool dagger = false;
  auto operator<=>(const LadderOp&) const = default;
};

inline LadderOp cre(int i) { return {i, true}; }
inline LadderOp ann(int i) { return {i, false}; }

using OperatorString = std::vector<LadderOp>;

/// Hermitian conjugate: reversed order, daggers flipped.
OperatorString adjoint(std::span<const LadderOp> ops);

struct LadderResult {
  int sign = 0;  ///< 0 when the string annihilates the determinant
  Determinant det;
};

/// Applies ops (rightmost first) to det. Each operator on spin orbital i
/// contributes (-1)^(occupied spin orbitals below i). Throws DomainError for
/// indices outside [0, n_spin_orbitals).
LadderResult apply_ladder_string(std::span<const LadderOp> ops, Determinant det,
                                 int n_spin_orbitals = kMaxSpinOrbitals);

struct OperatorTerm {
  double coefficient = 0.0;
  OperatorString ops;
};

/// Explicit sum of coefficient * ladder string.
struct SecondQuantizedOperator {
  int n_spin_orbitals = 0;
  std::vector<OperatorTerm> terms;

  void validate() const;

  /// Every term of the spin-orbital Hamiltonian, one string per index tuple
  /// (scalar included as an empty string). Used as a slow reference.
  static SecondQuantizedOperator from_integrals(const integrals::MolecularIntegrals& mo);
};

/// Fixed particle-number (and optionally S_z) sector, determinants sorted by
/// ascending bitmask.
class Sector {
 public:
  Sector(int n_spin_orbitals, int n_electrons, std::optional<int> sz2 = std::nullopt);

  int n_spin_orbitals() const { return n_spin_orbitals_; }
  int n_electrons() const { return n_electrons_; }
  std::size_t size() const { return dets_.size(); }
  const std::vector<Determinant>& determinants() const { return dets_; }
  const Determinant& operator[](std::size_t i) const { return dets_[i]; }
  std::optional<std::size_t> index_of(Determinant d) const;

 private:
  int n_spin_orbitals_;
  int n_electrons_;
  std::vector<Determinant> dets_;
  std::unordered_map<Determinant, std::size_t, DeterminantHash> lookup_;
};

}  // namespace qse::fci
