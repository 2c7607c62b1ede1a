#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <span>

#include "qse/fci/determinant.hpp"

namespace qse::fci {

using Complex = std::complex<double>;

/// Sparse determinant -> amplitude map.
class Wavefunction {
 public:
  using Map = std::map<Determinant, Complex>;

  Wavefunction() = default;
  Wavefunction(int n_spin_orbitals, int n_electrons);

  int n_spin_orbitals() const { return n_spin_orbitals_; }
  int n_electrons() const { return n_electrons_; }
  std::size_t size() const { return amps_.size(); }
  const Map& amplitudes() const { return amps_; }
  Map::const_iterator begin() const { return amps_.begin(); }
  Map::const_iterator end() const { return amps_.end(); }

  Complex amplitude(Determinant d) const;
  /// Throws DomainError if d has the wrong electron count or orbital range.
  void set(Determinant d, Complex value);
  void add(Determinant d, Complex value);

  double norm() const;
  void normalize();
  void scale(Complex factor);
  /// Drops amplitudes with magnitude <= tol.
  void prune(double tol = 0.0);

  /// <this|other>
  Complex inner(const Wavefunction& other) const;

  /// Throws DomainError unless normalized to tol and inside the declared sector.
  void validate(double tol = 1e-10) const;

  /// One `bitmask amplitude_re amplitude_im` line per determinant after a
  /// `# n_spin_orbitals n_electrons` header.
  void write_text(std::ostream& out) const;
  static Wavefunction read_text(std::istream& in);

  static Wavefunction determinant(int n_spin_orbitals, Determinant d);

 private:
  int n_spin_orbitals_ = 0;
  int n_electrons_ = 0;
  Map amps_;
};

/// string|psi>, term-wise. The electron count shifts by (#creators - #annihilators).
Wavefunction apply_string(std::span<const LadderOp> ops, const Wavefunction& psi);

/// <bra| sum_t c_t string_t |ket> by explicit determinant application.
Complex full_space_expectation(const Wavefunction& bra, std::span<const OperatorTerm> terms, const Wavefunction& ket);
Complex full_space_expectation(const Wavefunction& bra, std::span<const LadderOp> ops, const Wavefunction& ket);

}  // namespace qse::fci
