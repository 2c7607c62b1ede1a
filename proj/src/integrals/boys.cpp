#include "qse/integrals/boys.hpp"

#include <cmath>
#include <numbers>

#include "qse/errors.hpp"

namespace qse::integrals {
namespace {

constexpr double kSwitchPoint = 25.0;

// Series F_m(x) = exp(-x) sum_k (2x)^k / ((2m+1)(2m+3)...(2m+2k+1)).
// All terms are positive, so there is no cancellation below the switch point.
double boys_series(int m, double x) {
  double term = 1.0 / (2 * m + 1);
  double sum = term;
  for (int k = 1; k < 400; ++k) {
    term *= 2.0 * x / (2 * m + 2 * k + 1);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return std::exp(-x) * sum;
}

}  // namespace

void boys_function_table(int m_max, double x, std::span<double> out) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("boys_function: x must be finite and >= 0");
  if (m_max < 0 || m_max > kBoysMaxOrder) throw DomainError("boys_function: order out of range [0, 8]");
  if (out.size() < static_cast<std::size_t>(m_max + 1)) throw ShapeError("boys_function_table: output too small");

  const double ex = std::exp(-x);
  if (x < kSwitchPoint) {
    // Seed at the highest order, then recur downwards (stable for small x).
    out[m_max] = boys_series(m_max, x);
    for (int m = m_max - 1; m >= 0; --m) out[m] = (2.0 * x * out[m + 1] + ex) / (2 * m + 1);
    return;
  }
  // Large x: closed form for F_0 and upward recursion, which is the stable
  // direction once 2x exceeds 2m+1.
  out[0] = 0.5 * std::sqrt(std::numbers::pi / x) * std::erf(std::sqrt(x));
  for (int m = 0; m < m_max; ++m) out[m + 1] = ((2 * m + 1) * out[m] - ex) / (2.0 * x);
}

double boys_function(int m, double x) {
  double table[kBoysMaxOrder + 1];
  if (m < 0 || m > kBoysMaxOrder) throw DomainError("boys_function: order out of range [0, 8]");
  boys_function_table(m, x, std::span<double>(table, m + 1));
  return table[m];
}

}  // namespace qse::integrals
