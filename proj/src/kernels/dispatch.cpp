#include <atomic>

#include "qse/kernels/kernels.hpp"

namespace qse::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(QSE_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detect_isa()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::avx2:
      return "avx2";
    case Isa::scalar:
      break;
  }
  return "scalar";
}

Isa detect_isa() { return cpu_has_avx2() ? Isa::avx2 : Isa::scalar; }

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

Isa set_active_isa(Isa isa) {
  if (isa == Isa::avx2 && !cpu_has_avx2()) isa = Isa::scalar;
  selected().store(isa, std::memory_order_relaxed);
  return isa;
}

double dot(std::span<const double> x, std::span<const double> y) {
#if defined(QSE_WITH_AVX2)
  if (active_isa() == Isa::avx2) return avx2::dot(x, y);
#endif
  return scalar::dot(x, y);
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
#if defined(QSE_WITH_AVX2)
  if (active_isa() == Isa::avx2) return avx2::axpy(alpha, x, y);
#endif
  scalar::axpy(alpha, x, y);
}

}  // namespace qse::kernels
