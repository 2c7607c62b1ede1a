#pragma once

#include <span>

namespace qse::integrals {

inline constexpr int kBoysMaxOrder = 8;

/// F_m(x) = \int_0^1 t^{2m} exp(-x t^2) dt for 0 <= m <= 8, x >= 0.
/// Throws DomainError outside that range.
double boys_function(int m, double x);

/// Fills out[0..m_max] with F_0(x)..F_{m_max}(x) in one pass.
void boys_function_table(int m_max, double x, std::span<double> out);

}  // namespace qse::integrals
