#pragma once

namespace qse::units {

inline constexpr double kAngstromPerBohr = 0.52917721092;

constexpr double angstrom_to_bohr(double r) { return r / kAngstromPerBohr; }
constexpr double bohr_to_angstrom(double r) { return r * kAngstromPerBohr; }

}  // namespace qse::units
