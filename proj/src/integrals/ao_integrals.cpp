#include "qse/integrals/ao_integrals.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "qse/errors.hpp"
#include "qse/integrals/boys.hpp"

namespace qse::integrals {

void EriTensor::set_symmetric(int p, int q, int r, int s, double v) {
  auto& t = *this;
  t(p, q, r, s) = v;
  t(q, p, r, s) = v;
  t(p, q, s, r) = v;
  t(q, p, s, r) = v;
  t(r, s, p, q) = v;
  t(s, r, p, q) = v;
  t(r, s, q, p) = v;
  t(s, r, q, p) = v;
}

double EriTensor::symmetry_violation() const {
  double worst = 0.0;
  const auto& t = *this;
  for (int p = 0; p < n_; ++p)
    for (int q = 0; q < n_; ++q)
      for (int r = 0; r < n_; ++r)
        for (int s = 0; s < n_; ++s) {
          const double v = t(p, q, r, s);
          worst = std::max({worst, std::abs(v - t(q, p, r, s)), std::abs(v - t(p, q, s, r)),
                            std::abs(v - t(r, s, p, q))});
        }
  return worst;
}

namespace {

constexpr int kMaxL = 1;                   // p functions
constexpr int kMaxHermite = 2 * kMaxL;     // per centre pair
constexpr int kMaxR = 2 * kMaxHermite;     // per quartet

// Hermite expansion coefficient E^{ij}_t for one Cartesian direction.
// qx = A_x - B_x.
double hermite_e(int i, int j, int t, double qx, double a, double b) {
  const double p = a + b;
  const double q = a * b / p;
  if (t < 0 || t > i + j || i < 0 || j < 0) return 0.0;
  if (i == 0 && j == 0 && t == 0) return std::exp(-q * qx * qx);
  if (j == 0) {
    return (1.0 / (2.0 * p)) * hermite_e(i - 1, j, t - 1, qx, a, b) - (q * qx / a) * hermite_e(i - 1, j, t, qx, a, b) +
           (t + 1) * hermite_e(i - 1, j, t + 1, qx, a, b);
  }
  return (1.0 / (2.0 * p)) * hermite_e(i, j - 1, t - 1, qx, a, b) + (q * qx / b) * hermite_e(i, j - 1, t, qx, a, b) +
         (t + 1) * hermite_e(i, j - 1, t + 1, qx, a, b);
}

double primitive_overlap(const std::array<int, 3>& li, const std::array<int, 3>& lj, const Vec3& a_pos,
                         const Vec3& b_pos, double a, double b) {
  const double p = a + b;
  double s = std::pow(std::numbers::pi / p, 1.5);
  for (int d = 0; d < 3; ++d) {
    if (li[d] < 0 || lj[d] < 0) return 0.0;
    s *= hermite_e(li[d], lj[d], 0, a_pos[d] - b_pos[d], a, b);
  }
  return s;
}

double primitive_kinetic(const std::array<int, 3>& li, const std::array<int, 3>& lj, const Vec3& a_pos,
                         const Vec3& b_pos, double a, double b) {
  const int lsum = lj[0] + lj[1] + lj[2];
  double t = b * (2 * lsum + 3) * primitive_overlap(li, lj, a_pos, b_pos, a, b);
  for (int d = 0; d < 3; ++d) {
    auto up = lj;
    up[d] += 2;
    auto down = lj;
    down[d] -= 2;
    t -= 2.0 * b * b * primitive_overlap(li, up, a_pos, b_pos, a, b);
    t -= 0.5 * lj[d] * (lj[d] - 1) * primitive_overlap(li, down, a_pos, b_pos, a, b);
  }
  return t;
}

// Hermite Coulomb integrals R^0_{tuv}(alpha, pc) for t+u+v <= lmax.
struct HermiteCoulomb {
  std::array<std::array<std::array<double, kMaxR + 1>, kMaxR + 1>, kMaxR + 1> r{};
};

void hermite_coulomb(int lmax, double alpha, const Vec3& pc, HermiteCoulomb& out) {
  double boys[kMaxR + 1];
  const double r2 = pc[0] * pc[0] + pc[1] * pc[1] + pc[2] * pc[2];
  boys_function_table(lmax, alpha * r2, std::span<double>(boys, lmax + 1));
  // work[n][t][u][v]
  double work[kMaxR + 1][kMaxR + 1][kMaxR + 1][kMaxR + 1];
  for (int n = lmax; n >= 0; --n) {
    work[n][0][0][0] = std::pow(-2.0 * alpha, n) * boys[n];
    for (int total = 1; total <= lmax - n; ++total) {
      for (int t = 0; t <= total; ++t) {
        for (int u = 0; u <= total - t; ++u) {
          const int v = total - t - u;
          double val = 0.0;
          if (t > 0) {
            if (t > 1) val += (t - 1) * work[n + 1][t - 2][u][v];
            val += pc[0] * work[n + 1][t - 1][u][v];
          } else if (u > 0) {
            if (u > 1) val += (u - 1) * work[n + 1][t][u - 2][v];
            val += pc[1] * work[n + 1][t][u - 1][v];
          } else {
            if (v > 1) val += (v - 1) * work[n + 1][t][u][v - 2];
            val += pc[2] * work[n + 1][t][u][v - 1];
          }
          work[n][t][u][v] = val;
        }
      }
    }
  }
  for (int t = 0; t <= lmax; ++t)
    for (int u = 0; u <= lmax - t; ++u)
      for (int v = 0; v <= lmax - t - u; ++v) out.r[t][u][v] = work[0][t][u][v];
}

// Product of two primitives: exponent, centre, coefficient product and the
// Hermite coefficients per direction.
struct PrimitivePair {
  double p = 0.0;
  Vec3 center{};
  double coef = 0.0;
  std::array<std::array<double, kMaxHermite + 1>, 3> e{};
  std::array<int, 3> lsum{};
};

std::vector<PrimitivePair> make_pairs(const BasisFunction& fa, const BasisFunction& fb) {
  std::vector<PrimitivePair> pairs;
  for (std::size_t i = 0; i < fa.exponents.size(); ++i) {
    for (std::size_t j = 0; j < fb.exponents.size(); ++j) {
      const double a = fa.exponents[i];
      const double b = fb.exponents[j];
      PrimitivePair pp;
      pp.p = a + b;
      pp.coef = fa.coefficients[i] * fb.coefficients[j];
      for (int d = 0; d < 3; ++d) {
        pp.center[d] = (a * fa.center[d] + b * fb.center[d]) / pp.p;
        pp.lsum[d] = fa.powers[d] + fb.powers[d];
        for (int t = 0; t <= pp.lsum[d]; ++t) {
          pp.e[d][t] = hermite_e(fa.powers[d], fb.powers[d], t, fa.center[d] - fb.center[d], a, b);
        }
      }
      pairs.push_back(pp);
    }
  }
  return pairs;
}

double contracted_eri(const std::vector<PrimitivePair>& ab, const std::vector<PrimitivePair>& cd) {
  constexpr double kTwoPiFiveHalves = 2.0 * 17.493418327624862;  // 2 pi^{5/2}
  double total = 0.0;
  HermiteCoulomb rt;
  for (const auto& x : ab) {
    for (const auto& y : cd) {
      const double p = x.p;
      const double q = y.p;
      const double alpha = p * q / (p + q);
      const Vec3 pq{x.center[0] - y.center[0], x.center[1] - y.center[1], x.center[2] - y.center[2]};
      const int lmax = x.lsum[0] + x.lsum[1] + x.lsum[2] + y.lsum[0] + y.lsum[1] + y.lsum[2];
      hermite_coulomb(lmax, alpha, pq, rt);
      double val = 0.0;
      for (int t = 0; t <= x.lsum[0]; ++t)
        for (int u = 0; u <= x.lsum[1]; ++u)
          for (int v = 0; v <= x.lsum[2]; ++v) {
            const double eab = x.e[0][t] * x.e[1][u] * x.e[2][v];
            if (eab == 0.0) continue;
            double inner = 0.0;
            for (int tau = 0; tau <= y.lsum[0]; ++tau)
              for (int nu = 0; nu <= y.lsum[1]; ++nu)
                for (int phi = 0; phi <= y.lsum[2]; ++phi) {
                  const double ecd = y.e[0][tau] * y.e[1][nu] * y.e[2][phi];
                  const double sign = ((tau + nu + phi) % 2 == 0) ? 1.0 : -1.0;
                  inner += sign * ecd * rt.r[t + tau][u + nu][v + phi];
                }
            val += eab * inner;
          }
      total += x.coef * y.coef * kTwoPiFiveHalves / (p * q * std::sqrt(p + q)) * val;
    }
  }
  return total;
}

}  // namespace

AoIntegrals compute_ao_integrals(const Geometry& geometry, const BasisSet& basis) {
  return compute_ao_integrals(geometry, build_basis_functions(geometry, basis));
}

AoIntegrals compute_ao_integrals(const Geometry& geometry, const std::vector<BasisFunction>& functions) {
  geometry.validate();
  for (const auto& f : functions) {
    if (f.powers[0] + f.powers[1] + f.powers[2] > kMaxL) {
      throw UnsupportedFeature("compute_ao_integrals: only s and p functions are supported");
    }
  }
  const int n = static_cast<int>(functions.size());
  AoIntegrals out;
  out.overlap = Eigen::MatrixXd::Zero(n, n);
  out.kinetic = Eigen::MatrixXd::Zero(n, n);
  out.nuclear = Eigen::MatrixXd::Zero(n, n);
  out.eri = EriTensor(n);
  out.e_nuc = geometry.nuclear_repulsion();

  std::vector<std::vector<PrimitivePair>> pairs(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) pairs[a * n + b] = make_pairs(functions[a], functions[b]);

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b <= a; ++b) {
      const auto& fa = functions[a];
      const auto& fb = functions[b];
      double s = 0.0, t = 0.0;
      for (std::size_t i = 0; i < fa.exponents.size(); ++i) {
        for (std::size_t j = 0; j < fb.exponents.size(); ++j) {
          const double c = fa.coefficients[i] * fb.coefficients[j];
          s += c * primitive_overlap(fa.powers, fb.powers, fa.center, fb.center, fa.exponents[i], fb.exponents[j]);
          t += c * primitive_kinetic(fa.powers, fb.powers, fa.center, fb.center, fa.exponents[i], fb.exponents[j]);
        }
      }
      double v = 0.0;
      for (const auto& pp : pairs[a * n + b]) {
        for (const auto& atom : geometry.atoms) {
          const Vec3 pc{pp.center[0] - atom.position[0], pp.center[1] - atom.position[1],
                        pp.center[2] - atom.position[2]};
          HermiteCoulomb rt;
          hermite_coulomb(pp.lsum[0] + pp.lsum[1] + pp.lsum[2], pp.p, pc, rt);
          double sum = 0.0;
          for (int tt = 0; tt <= pp.lsum[0]; ++tt)
            for (int u = 0; u <= pp.lsum[1]; ++u)
              for (int w = 0; w <= pp.lsum[2]; ++w) sum += pp.e[0][tt] * pp.e[1][u] * pp.e[2][w] * rt.r[tt][u][w];
          v -= atom.charge * pp.coef * (2.0 * std::numbers::pi / pp.p) * sum;
        }
      }
      out.overlap(a, b) = out.overlap(b, a) = s;
      out.kinetic(a, b) = out.kinetic(b, a) = t;
      out.nuclear(a, b) = out.nuclear(b, a) = v;
    }
  }

  // Unique quartets a>=b, c>=d, (ab)>=(cd); fixed loop order keeps the
  // result bitwise reproducible.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b <= a; ++b) {
      const int ab = a * (a + 1) / 2 + b;
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d <= c; ++d) {
          const int cd = c * (c + 1) / 2 + d;
          if (cd > ab) continue;
          out.eri.set_symmetric(a, b, c, d, contracted_eri(pairs[a * n + b], pairs[c * n + d]));
        }
      }
    }
  }
  return out;
}

}  // namespace qse::integrals
