#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <vector>

#include "qse/integrals/mo_integrals.hpp"
#include "qse/oo/rotation.hpp"
#include "qse/rdm/rdm.hpp"

namespace qse::oo {

/// a0 + sum_{m=1..4} (a_m cos m t + b_m sin m t).
struct TrigPolynomial {
  static constexpr int kSamples = 9;
  double a0 = 0.0;
  std::array<double, 4> a{};
  std::array<double, 4> b{};

  double operator()(double theta) const;
  double derivative(double theta) const;
  double second_derivative(double theta) const;

  /// Sample angles -pi + 2 pi k / 9.
  static std::array<double, kSamples> sample_angles();
  /// Exact interpolation of the nine samples.
  static TrigPolynomial fit(const std::array<double, kSamples>& values);
  static TrigPolynomial fit(const std::function<double(double)>& f);

  /// Global minimizer on (-pi, pi]: dense scan then Newton refinement.
  double argmin(int scan_points = 10000) const;
  /// Minimizer of the basin containing t = 0: walks downhill from 0 on the
  /// same grid, then Newton refinement.
  double local_argmin(int scan_points = 10000) const;
};

/// Global takes the lowest point of each angle's curve, which may swap an
/// active orbital with a virtual one. Local stays in the basin of the
/// current orbitals.
enum class AngleSearch { Global, Local };

struct SweepOptions {
  int max_sweeps = 50;
  double angle_tol = 1e-7;     ///< stop when every angle of a sweep is smaller
  double energy_tol = 1e-12;   ///< or when no angle lowers the energy by more
  bool include_active_active = false;
  AngleSearch angle_search = AngleSearch::Global;
};

struct AngleRecord {
  int sweep = 0;
  OrbitalPair pair;
  double theta = 0.0;
  double energy = 0.0;  ///< after this step
};

struct RelaxationReport {
  double initial_energy = 0.0;
  double final_energy = 0.0;
  std::vector<double> energy_trace;  ///< initial, then after each sweep (or per evaluation batch)
  std::vector<AngleRecord> angles;
  int sweeps = 0;
  int evaluations = 0;
  bool converged = false;
  bool budget_exhausted = false;

  void write_text(std::ostream& out) const;
};

struct RelaxationResult {
  RotationParameters rotation;
  RelaxationReport report;
};

/// Minimizes the energy of fixed full-space spatial RDMs over Givens
/// rotations, one angle at a time, in rotation_pairs order. An angle is kept
/// only when it does not raise the energy.
RelaxationResult givens_sweep(const integrals::MolecularIntegrals& mo, const rdm::SpatialRdms& rdms,
                              const integrals::OrbitalPartition& partition, const SweepOptions& options = {});

}  // namespace qse::oo
