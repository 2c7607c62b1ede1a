#pragma once

#include <array>
#include <string>
#include <vector>

namespace qse::integrals {

using Vec3 = std::array<double, 3>;

struct Atom {
  std::string symbol;
  double charge = 0.0;  ///< nuclear charge
  Vec3 position{};      ///< bohr
};

struct Geometry {
  std::vector<Atom> atoms;

  /// Throws DomainError on an empty list, non-positive charges or
  /// non-finite coordinates.
  void validate() const;

  double nuclear_repulsion() const;
  int total_nuclear_charge() const;

  Geometry translated(const Vec3& shift) const;

  /// Two atoms on the z axis, the first at the origin.
  static Geometry diatomic(const std::string& a, const std::string& b, double r_bohr);
};

/// Nuclear charge of a supported element symbol (H, He, Li ... Ne).
double nuclear_charge(const std::string& symbol);

}  // namespace qse::integrals
