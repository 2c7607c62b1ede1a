#pragma once

// Dense double-precision loops shared by the integral transformation and the
// RDM energy contractions. A portable scalar version is always built; an
// AVX2/FMA version is compiled when the toolchain supports it and selected at
// runtime when the CPU does.

#include <span>
#include <string_view>

namespace qse::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// Best variant available on this machine.
Isa detect_isa();

/// Variant used by the dispatching entry points below.
Isa active_isa();

/// Overrides the dispatch choice (tests use this to compare variants).
/// Requesting an ISA that was not compiled in or that the CPU lacks falls
/// back to scalar. Returns the ISA actually selected.
Isa set_active_isa(Isa isa);

double dot(std::span<const double> x, std::span<const double> y);
void axpy(double alpha, std::span<const double> x, std::span<double> y);

namespace scalar {
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
}  // namespace scalar

#if defined(QSE_WITH_AVX2)
namespace avx2 {
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
}  // namespace avx2
#endif

}  // namespace qse::kernels
