#include "qse/oo/givens.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "qse/errors.hpp"
#include "qse/oo/energy.hpp"

namespace qse::oo {

double TrigPolynomial::operator()(double t) const {
  double v = a0;
  for (int m = 1; m <= 4; ++m) v += a[m - 1] * std::cos(m * t) + b[m - 1] * std::sin(m * t);
  return v;
}

double TrigPolynomial::derivative(double t) const {
  double v = 0.0;
  for (int m = 1; m <= 4; ++m) v += m * (b[m - 1] * std::cos(m * t) - a[m - 1] * std::sin(m * t));
  return v;
}

double TrigPolynomial::second_derivative(double t) const {
  double v = 0.0;
  for (int m = 1; m <= 4; ++m) v -= m * m * (a[m - 1] * std::cos(m * t) + b[m - 1] * std::sin(m * t));
  return v;
}

std::array<double, TrigPolynomial::kSamples> TrigPolynomial::sample_angles() {
  std::array<double, kSamples> t{};
  for (int k = 0; k < kSamples; ++k) t[k] = -std::numbers::pi + 2.0 * std::numbers::pi * k / kSamples;
  return t;
}

TrigPolynomial TrigPolynomial::fit(const std::array<double, kSamples>& values) {
  // Discrete Fourier coefficients; exact since 4 < 9/2.
  const auto t = sample_angles();
  TrigPolynomial f;
  for (int k = 0; k < kSamples; ++k) f.a0 += values[k];
  f.a0 /= kSamples;
  for (int m = 1; m <= 4; ++m) {
    double sa = 0.0, sb = 0.0;
    for (int k = 0; k < kSamples; ++k) {
      sa += values[k] * std::cos(m * t[k]);
      sb += values[k] * std::sin(m * t[k]);
    }
    f.a[m - 1] = 2.0 * sa / kSamples;
    f.b[m - 1] = 2.0 * sb / kSamples;
  }
  return f;
}

TrigPolynomial TrigPolynomial::fit(const std::function<double(double)>& fn) {
  std::array<double, kSamples> v{};
  const auto t = sample_angles();
  for (int k = 0; k < kSamples; ++k) v[k] = fn(t[k]);
  return fit(v);
}

namespace {

double newton_refine(const TrigPolynomial& f, double t) {
  for (int it = 0; it < 50; ++it) {
    const double d2 = f.second_derivative(t);
    if (d2 <= 0.0) break;
    const double step = f.derivative(t) / d2;
    const double next = t - step;
    if (f(next) > f(t)) break;
    t = next;
    if (std::abs(step) < 1e-15) break;
  }
  return wrap_angle(t);
}

}  // namespace

double TrigPolynomial::argmin(int scan_points) const {
  constexpr double pi = std::numbers::pi;
  double best_t = 0.0, best = (*this)(0.0);
  for (int k = 0; k < scan_points; ++k) {
    const double t = -pi + 2.0 * pi * (k + 1) / scan_points;
    const double v = (*this)(t);
    if (v < best) {
      best = v;
      best_t = t;
    }
  }
  return newton_refine(*this, best_t);
}

double TrigPolynomial::local_argmin(int scan_points) const {
  const double h = 2.0 * std::numbers::pi / scan_points;
  const double dir = derivative(0.0) > 0.0 ? -1.0 : 1.0;
  double t = 0.0, v = (*this)(0.0);
  for (int k = 0; k < scan_points / 2; ++k) {
    const double next = (*this)(t + dir * h);
    if (next >= v) break;
    t += dir * h;
    v = next;
  }
  return newton_refine(*this, t);
}


RelaxationResult givens_sweep(const integrals::MolecularIntegrals& mo, const rdm::SpatialRdms& rdms,
                              const integrals::OrbitalPartition& partition, const SweepOptions& options) {
  partition.validate(mo.n_spatial);
  if (rdms.n_spatial != mo.n_spatial) throw ShapeError("RDM and integral orbital counts differ");
  if (options.max_sweeps < 0) throw DomainError("negative sweep count");
  const int n = mo.n_spatial;
  const auto pairs = rotation_pairs(partition, options.include_active_active);

  RelaxationResult res;
  res.rotation = RotationParameters::identity(n);
  auto& rep = res.report;
  integrals::MolecularIntegrals cur = mo;
  double e = rdm::contract_energy(cur, rdms);
  rep.initial_energy = e;
  rep.energy_trace.push_back(e);
  rep.evaluations = 1;
  if (pairs.empty()) rep.converged = true;

  for (int sweep = 0; sweep < options.max_sweeps && !rep.converged; ++sweep) {
    double max_angle = 0.0, max_gain = 0.0;
    for (const auto& pair : pairs) {
      const auto fit = TrigPolynomial::fit([&](double t) {
        return rdm::contract_energy(integrals::rotate_orbitals(cur, givens_matrix(n, pair, t)), rdms);
      });
      rep.evaluations += TrigPolynomial::kSamples;
      const double theta = options.angle_search == AngleSearch::Global ? fit.argmin() : fit.local_argmin();
      const auto trial = integrals::rotate_orbitals(cur, givens_matrix(n, pair, theta));
      const double et = rdm::contract_energy(trial, rdms);
      ++rep.evaluations;
      if (et >= e) continue;
      max_gain = std::max(max_gain, e - et);
      max_angle = std::max(max_angle, std::abs(theta));
      cur = trial;
      e = et;
      res.rotation.append(pair, theta);
      rep.angles.push_back({sweep, pair, theta, e});
    }
    rep.energy_trace.push_back(e);
    rep.sweeps = sweep + 1;
    if (max_angle < options.angle_tol || max_gain < options.energy_tol) rep.converged = true;
  }
  rep.final_energy = e;
  return res;
}

void RelaxationReport::write_text(std::ostream& out) const {
  char buf[128];
  std::snprintf(buf, sizeof buf, "initial_energy %.15f\nfinal_energy %.15f\n", initial_energy, final_energy);
  out << buf;
  out << "sweeps " << sweeps << "\nevaluations " << evaluations << "\nconverged " << converged
      << "\nbudget_exhausted " << budget_exhausted << '\n';
  out << "# trace\n";
  for (std::size_t k = 0; k < energy_trace.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%zu %.15f\n", k, energy_trace[k]);
    out << buf;
  }
  out << "# sweep p q theta energy\n";
  for (const auto& a : angles) {
    std::snprintf(buf, sizeof buf, "%d %d %d %.15e %.15f\n", a.sweep, a.pair.p, a.pair.q, a.theta, a.energy);
    out << buf;
  }
}

}  // namespace qse::oo
