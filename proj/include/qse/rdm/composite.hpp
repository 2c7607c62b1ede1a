#pragma once

#include "qse/integrals/partition.hpp"
#include "qse/rdm/rdm.hpp"

namespace qse::rdm {

struct CompositeRdms {
  Rdm d1;
  Rdm d2;
};

/// Full-space 1- and 2-RDM of (doubly occupied core) x (active state) x
/// (empty virtuals). The active RDMs are indexed by position in the sorted
/// active spin-orbital list of `partition`.
CompositeRdms composite_full_rdms(const Rdm& active_d1, const Rdm& active_d2,
                                  const integrals::OrbitalPartition& partition, int n_spatial);

}  // namespace qse::rdm
