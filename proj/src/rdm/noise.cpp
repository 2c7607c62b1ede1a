#include "qse/rdm/noise.hpp"

#include <cmath>
#include <random>

#include "qse/errors.hpp"

namespace qse::rdm {

Rdm inject_shot_noise(const Rdm& d, double n_shots, std::uint64_t seed) {
  if (!(n_shots > 0.0)) throw DomainError("n_shots must be positive");
  const double sigma = 1.0 / std::sqrt(n_shots);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Rdm out = d;
  auto& m = out.matrix();
  for (Eigen::Index u = 0; u < m.rows(); ++u) {
    m(u, u) = Complex(m(u, u).real() + sigma * gauss(rng), 0.0);
    for (Eigen::Index p = u + 1; p < m.cols(); ++p) {
      const double re = sigma * gauss(rng);
      const double im = sigma * gauss(rng);
      m(u, p) += Complex(re, im);
      m(p, u) = std::conj(m(u, p));
    }
  }
  return out;
}

}  // namespace qse::rdm
