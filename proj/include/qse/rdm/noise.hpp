#pragma once

#include <cstdint>

#include "qse/rdm/rdm.hpp"

namespace qse::rdm {

/// Adds N(0, 1/sqrt(n_shots)) noise to every independent canonical element
/// (real part always, imaginary part off the diagonal), then writes the
/// Hermitian mirror. Deterministic for a fixed seed. Throws DomainError for
/// n_shots <= 0.
Rdm inject_shot_noise(const Rdm& d, double n_shots, std::uint64_t seed);

}  // namespace qse::rdm
