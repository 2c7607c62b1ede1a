#pragma once

#include <optional>

#include "qse/rdm/rdm.hpp"

namespace qse::rdm {

/// Cumulants in the normalization d_k = D_k / k!:
///   Delta1 = d1
///   Delta2 = d2 - d1^d1
///   Delta3 = d3 - d1^d1^d1 - 3 Delta2^d1
///   Delta4 = d4 - d1^4 - 6 Delta2^d1^d1 - 3 Delta2^Delta2 - 4 Delta3^d1
/// Stored in the same (unnormalized) layout as Rdm.
struct CumulantSet {
  Rdm delta1;
  Rdm delta2;
  std::optional<Rdm> delta3;
  std::optional<Rdm> delta4;
};

CumulantSet compute_cumulants(const RdmSet& rdms);

/// 3-RDM with Delta3 = 0.
Rdm reconstruct_3rdm(const Rdm& d1, const Rdm& d2);

/// 4-RDM from the cumulant expansion. truncation_rank 2 drops Delta3 and
/// Delta4; truncation_rank 3 keeps Delta3 (needs d3) and drops Delta4.
Rdm cumulant_4rdm(const Rdm& d1, const Rdm& d2, int truncation_rank = 2, const Rdm* d3 = nullptr);

/// Frobenius norm of (approx - exact) over the full index range.
double reconstruction_error(const Rdm& approx, const Rdm& exact);

}  // namespace qse::rdm
