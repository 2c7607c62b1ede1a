#include "qse/integrals/geometry.hpp"

#include <cmath>

#include "qse/errors.hpp"

namespace qse::integrals {

double nuclear_charge(const std::string& symbol) {
  static const char* kSymbols[] = {"H", "He", "Li", "Be", "B", "C", "N", "O", "F", "Ne"};
  for (int z = 0; z < 10; ++z) {
    if (symbol == kSymbols[z]) return z + 1.0;
  }
  throw DomainError("unknown element symbol '" + symbol + "'");
}

void Geometry::validate() const {
  if (atoms.empty()) throw DomainError("geometry has no atoms");
  for (const auto& a : atoms) {
    if (!(a.charge > 0.0)) throw DomainError("nuclear charge of " + a.symbol + " must be positive");
    for (double c : a.position) {
      if (!std::isfinite(c)) throw DomainError("non-finite coordinate for " + a.symbol);
    }
  }
}

double Geometry::nuclear_repulsion() const {
  double e = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto& a = atoms[i].position;
      const auto& b = atoms[j].position;
      const double r = std::sqrt((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) +
                                 (a[2] - b[2]) * (a[2] - b[2]));
      e += atoms[i].charge * atoms[j].charge / r;
    }
  }
  return e;
}

int Geometry::total_nuclear_charge() const {
  double z = 0.0;
  for (const auto& a : atoms) z += a.charge;
  return static_cast<int>(std::lround(z));
}

Geometry Geometry::translated(const Vec3& shift) const {
  Geometry g = *this;
  for (auto& a : g.atoms) {
    for (int k = 0; k < 3; ++k) a.position[k] += shift[k];
  }
  return g;
}

Geometry Geometry::diatomic(const std::string& a, const std::string& b, double r_bohr) {
  Geometry g;
  g.atoms.push_back({a, nuclear_charge(a), {0.0, 0.0, 0.0}});
  g.atoms.push_back({b, nuclear_charge(b), {0.0, 0.0, r_bohr}});
  return g;
}

}  // namespace qse::integrals
