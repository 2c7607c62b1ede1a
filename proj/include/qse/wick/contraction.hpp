#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

#include "qse/fci/determinant.hpp"
#include "qse/integrals/partition.hpp"

namespace qse::wick {

using Complex = std::complex<double>;
using integrals::Space;

struct LabeledOp {
  int index = 0;  ///< spin orbital
  bool dagger = false;
  Space label = Space::Active;
};

struct LabeledString {
  std::vector<LabeledOp> ops;
  Complex coefficient = 1.0;
};

/// One surviving term: coefficient times <active string>.
struct ContractionTerm {
  Complex coefficient;
  fci::OperatorString active;  ///< spin-orbital indices, original relative order
};

struct ContractionResult {
  std::vector<ContractionTerm> terms;
};

/// Throws LabelError unless every label is Active or Virtual and agrees with
/// the partition.
void check_labels(const LabeledString& s, const integrals::SpinPartition& partition);

/// Sign of moving every virtual operator to the left of every active one,
/// keeping the relative order inside both groups.
int separation_sign(std::span<const bool> is_virtual);

/// <vac| ops |vac> for a string of virtual operators. Contracts the leftmost
/// operator with each later creator (sign (-1)^(operators in between)).
double vacuum_expectation(std::span<const fci::LadderOp> ops);

/// Index-abstracted contraction of one label pattern: the separation sign,
/// every complete pairing of the virtual positions, and the active positions.
struct Pattern {
  int separation_sign = 1;
  std::vector<int> virtual_positions;
  std::vector<int> active_positions;
  /// Each pairing lists (annihilator position, creator position) pairs into
  /// the full string; its sign includes the pairing parity.
  struct Pairing {
    int sign = 1;
    std::vector<std::pair<int, int>> pairs;
  };
  std::vector<Pairing> pairings;

  /// sum over pairings of sign * prod delta(index[a], index[b]) times the
  /// separation sign, for concrete indices of the full string.
  double virtual_factor(std::span<const int> indices) const;
};

/// Builds the pattern for a sequence of (dagger, is_virtual) flags.
Pattern make_pattern(std::span<const bool> dagger, std::span<const bool> is_virtual);

/// Contracts all virtual operators against the virtual vacuum.
ContractionResult contract_virtuals(const LabeledString& s, const integrals::SpinPartition& partition);

}  // namespace qse::wick
