#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "qse/fci/wavefunction.hpp"
#include "qse/integrals/mo_integrals.hpp"

namespace qse::rdm {

using Complex = std::complex<double>;
inline constexpr int kMaxRank = 4;
using Tuple = std::array<int, kMaxRank>;

/// Binomial coefficient C(n, k); 0 outside 0 <= k <= n.
std::size_t binomial(int n, int k);

/// Antisymmetric rank-(k,k) tensor over n spin orbitals,
///   D^{u1..uk}_{p1..pk} = <a+_uk ... a+_u1 a_p1 ... a_pk>.
/// Only strictly increasing index tuples are stored (as a C(n,k) x C(n,k)
/// matrix, rows upper, columns lower); other orderings are reached through
/// the permutation sign, repeated indices give zero.
class Rdm {
 public:
  Rdm() = default;
  Rdm(int k, int n);

  int rank() const { return k_; }
  int n() const { return n_; }
  std::size_t n_tuples() const { return tuples_.size(); }
  /// k-subsets of [0, n) in increasing bitmask order.
  const std::vector<Tuple>& tuples() const { return tuples_; }
  /// Position of a strictly increasing tuple in tuples().
  std::size_t index_of(std::span<const int> sorted) const;

  Complex get(std::span<const int> upper, std::span<const int> lower) const;
  /// Stores v at the canonical slot (with sign); no-op for repeated indices.
  void set(std::span<const int> upper, std::span<const int> lower, Complex v);

  Eigen::MatrixXcd& matrix() { return data_; }
  const Eigen::MatrixXcd& matrix() const { return data_; }

  /// Set when k exceeds the electron count of the source state; the tensor
  /// is then identically zero.
  bool exceeds_particle_number = false;
  /// Electron count of the source state, -1 if unknown.
  int n_electrons = -1;

  /// sum_P D^P_P over all (ordered) index tuples, i.e. k! times the trace of
  /// matrix().
  Complex trace() const;
  double hermiticity_violation() const;
  void hermitize();

  Rdm& operator+=(const Rdm& o);
  Rdm& operator-=(const Rdm& o);
  Rdm& operator*=(Complex s);
  friend Rdm operator+(Rdm a, const Rdm& b) { return a += b; }
  friend Rdm operator-(Rdm a, const Rdm& b) { return a -= b; }
  friend Rdm operator*(Complex s, Rdm a) { return a *= s; }

  /// Sparse text: `# n N k` header, then `k u1..uk p1..pk re im` for every
  /// nonzero canonical element.
  void write_text(std::ostream& out) const;

 private:
  int k_ = 0;
  int n_ = 0;
  std::vector<Tuple> tuples_;
  Eigen::MatrixXcd data_;
};

/// Sorts idx in place; returns the permutation sign, or 0 on repeats.
int sort_with_sign(std::span<int> idx);

/// k-RDM of psi; for k > N the result is zero with exceeds_particle_number set.
/// Throws DomainError for k outside [1, 4].
Rdm compute_rdm(const fci::Wavefunction& psi, int k);

/// Contracts the last upper and lower index: result^{U'}_{P'} = sum_x D^{U'x}_{P'x}.
/// Equals (N - k + 1) times the (k-1)-RDM.
Rdm partial_trace(const Rdm& d);

/// RDMs of ranks 1..4 (each optional).
struct RdmSet {
  int n = 0;
  int n_electrons = 0;
  std::array<std::optional<Rdm>, kMaxRank + 1> by_rank;

  bool has(int k) const { return k >= 1 && k <= kMaxRank && by_rank[k].has_value(); }
  /// Throws MissingDataError when absent.
  const Rdm& get(int k) const;
  void put(Rdm d);

  static RdmSet compute(const fci::Wavefunction& psi, int max_rank);
};

/// Spin-summed real RDMs over spatial orbitals:
///   gamma_pq   = sum_s <a+_ps a_qs>,
///   Gamma_pqrs = sum_st <a+_ps a+_rt a_st a_qs>   (chemist layout).
struct SpatialRdms {
  int n_spatial = 0;
  Eigen::MatrixXd gamma;
  std::vector<double> Gamma;

  double Gamma_at(int p, int q, int r, int s) const {
    return Gamma[((static_cast<std::size_t>(p) * n_spatial + q) * n_spatial + r) * n_spatial + s];
  }
};

SpatialRdms spin_summed(const Rdm& d1, const Rdm& d2);

/// constant + sum h1 gamma + 1/2 sum (pq|rs) Gamma.
double contract_energy(const integrals::MolecularIntegrals& mo, const SpatialRdms& rdms);
double energy_from_rdms(const integrals::MolecularIntegrals& mo, const Rdm& d1, const Rdm& d2);

}  // namespace qse::rdm
