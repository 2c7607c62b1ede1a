#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qse/rdm/rdm.hpp"
#include "qse/wick/contraction.hpp"

namespace qse::wick {

/// D^{upper}_{lower} with a coefficient; empty upper/lower means <1>.
struct NormalTerm {
  double coefficient = 0.0;
  std::vector<int> upper;
  std::vector<int> lower;
};

/// Normal orders an active string with a_p a+_q = delta_pq - a+_q a_p and maps
/// each a+_c1..a+_ck a_p1..a_pk to D^{ck..c1}_{p1..pk}. Like terms are merged.
std::vector<NormalTerm> normal_order(std::span<const fci::LadderOp> ops);

/// Memoized <Psi| string |Psi> over local active spin orbitals, from RDMs.
/// Not thread-safe; use one instance per thread.
class ActiveExpectation {
 public:
  explicit ActiveExpectation(const rdm::RdmSet& rdms) : rdms_(&rdms) {}

  Complex operator()(std::span<const fci::LadderOp> local_ops);

  /// Value of D^{upper}_{lower}; ranks above the electron or orbital count give zero,
  /// other missing ranks throw MissingDataError.
  Complex rdm_element(std::span<const int> upper, std::span<const int> lower) const;

  std::size_t cache_size() const { return memo_.size(); }
  const rdm::RdmSet& rdms() const { return *rdms_; }

 private:
  Complex value(std::string& key);

  const rdm::RdmSet* rdms_;
  std::unordered_map<std::string, Complex> memo_;
};

}  // namespace qse::wick
