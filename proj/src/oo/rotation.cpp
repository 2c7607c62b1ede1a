#include "qse/oo/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unsupported/Eigen/MatrixFunctions>

#include "qse/errors.hpp"

namespace qse::oo {

Eigen::MatrixXd givens_matrix(int n, OrbitalPair pair, double theta) {
  if (pair.p < 0 || pair.q < 0 || pair.p >= n || pair.q >= n || pair.p == pair.q)
    throw DomainError("Givens pair out of range");
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(n, n);
  const double c = std::cos(theta), s = std::sin(theta);
  g(pair.p, pair.p) = c;
  g(pair.q, pair.q) = c;
  g(pair.p, pair.q) = -s;
  g(pair.q, pair.p) = s;
  return g;
}

double wrap_angle(double theta) {
  constexpr double pi = std::numbers::pi;
  double t = std::remainder(theta, 2.0 * pi);  // [-pi, pi]
  if (t <= -pi) t += 2.0 * pi;
  return t;
}

RotationParameters RotationParameters::identity(int n_spatial) {
  RotationParameters r;
  r.n_spatial = n_spatial;
  return r;
}

Eigen::MatrixXd RotationParameters::unitary() const {
  Eigen::MatrixXd u = base.size() ? base : Eigen::MatrixXd::Identity(n_spatial, n_spatial);
  if (u.rows() != n_spatial || u.cols() != n_spatial) throw ShapeError("base rotation has the wrong size");
  if (pairs.size() != angles.size()) throw ShapeError("pair and angle counts differ");
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    // Right-multiplying by a Givens factor mixes two columns.
    const auto [p, q] = pairs[k];
    const double c = std::cos(angles[k]), s = std::sin(angles[k]);
    const Eigen::VectorXd cp = u.col(p), cq = u.col(q);
    u.col(p) = c * cp + s * cq;
    u.col(q) = -s * cp + c * cq;
  }
  return u;
}

void RotationParameters::append(OrbitalPair pair, double theta) {
  pairs.push_back(pair);
  angles.push_back(wrap_angle(theta));
}

Eigen::MatrixXd unitary_from_generator(const Eigen::MatrixXd& t) {
  if (t.rows() != t.cols()) throw ShapeError("generator must be square");
  if (t.size() && (t + t.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw DomainError("generator is not antisymmetric");
  return t.exp();
}

std::vector<OrbitalPair> rotation_pairs(const integrals::OrbitalPartition& partition, bool include_active_active) {
  std::vector<int> active = partition.active;
  std::vector<int> core = partition.core, virt = partition.virtuals;
  std::sort(active.begin(), active.end());
  std::sort(core.begin(), core.end());
  std::sort(virt.begin(), virt.end());
  std::vector<OrbitalPair> out;
  for (int i : active) {
    for (int c : core) out.push_back({i, c});
    for (int v : virt) out.push_back({i, v});
  }
  if (include_active_active)
    for (std::size_t a = 0; a < active.size(); ++a)
      for (std::size_t b = a + 1; b < active.size(); ++b) out.push_back({active[a], active[b]});
  return out;
}

double unitarity_violation(const Eigen::MatrixXd& u) {
  if (u.rows() != u.cols()) throw ShapeError("rotation must be square");
  return (u.transpose() * u - Eigen::MatrixXd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

}  // namespace qse::oo
