#pragma once

#include <iosfwd>

#include "qse/wick/active_expectation.hpp"

namespace qse::wick {

/// <Psi_A (x) vac| string |Psi_A (x) vac>. Active RDMs are indexed by
/// position in partition.active. Throws MissingDataError naming the rank
/// when a needed RDM is absent.
Complex evaluate(const LabeledString& s, const rdm::RdmSet& rdms, const integrals::SpinPartition& partition);
Complex evaluate(const LabeledString& s, ActiveExpectation& active, const integrals::SpinPartition& partition);

/// Labels each operator from the partition.
LabeledString label(std::span<const fci::LadderOp> ops, const integrals::SpinPartition& partition,
                    Complex coefficient = 1.0);

/// Debug dump, one `coeff * D[u...|p...]` line per normal-ordered term
/// (spin-orbital indices; `D[|]` is the norm).
void dump(const ContractionResult& result, std::ostream& out);

}  // namespace qse::wick
