#pragma once

#include "qse/rdm/rdm.hpp"

namespace qse::rdm {

/// Grassmann wedge product of antisymmetric tensors of ranks a and b,
///   (A^B)^U_P = 1/((a+b)!)^2 sum_{pi,sigma} sgn(pi) sgn(sigma)
///               A^{pi(U)_1..a}_{sigma(P)_1..a} B^{pi(U)_a+1..}_{sigma(P)_a+1..}.
/// Throws ShapeError on differing n or a+b > 4.
Rdm wedge(const Rdm& a, const Rdm& b);

}  // namespace qse::rdm
