#include "qse/rdm/rdm.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <ostream>
#include <string>
#include <unordered_map>

#include "qse/errors.hpp"
#include "qse/kernels/kernels.hpp"

namespace qse::rdm {

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

Rdm::Rdm(int k, int n) : k_(k), n_(n) {
  if (k < 1 || k > kMaxRank) throw DomainError("RDM rank must lie in [1, 4]");
  if (n < 0 || n >= fci::kMaxSpinOrbitals) throw DomainError("unsupported spin-orbital count");
  if (k <= n) {
    // Gosper's hack gives colex order, matching index_of.
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t v = (std::uint64_t{1} << k) - 1;
    while (v < limit) {
      Tuple t{};
      std::uint64_t w = v;
      for (int j = 0; j < k; ++j) {
        t[j] = std::countr_zero(w);
        w &= w - 1;
      }
      tuples_.push_back(t);
      const std::uint64_t s = v | (v - 1);
      v = (s + 1) | (((~s & -~s) - 1) >> (std::countr_zero(v) + 1));
    }
  }
  const auto m = static_cast<Eigen::Index>(tuples_.size());
  data_ = Eigen::MatrixXcd::Zero(m, m);
}

std::size_t Rdm::index_of(std::span<const int> sorted) const {
  std::size_t r = 0;
  for (int j = 0; j < k_; ++j) r += binomial(sorted[j], j + 1);
  return r;
}

int sort_with_sign(std::span<int> idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

Complex Rdm::get(std::span<const int> upper, std::span<const int> lower) const {
  if (static_cast<int>(upper.size()) != k_ || static_cast<int>(lower.size()) != k_) throw ShapeError("RDM index count differs from rank");
  Tuple u{}, p{};
  std::copy(upper.begin(), upper.end(), u.begin());
  std::copy(lower.begin(), lower.end(), p.begin());
  for (int j = 0; j < k_; ++j) {
    if (u[j] < 0 || u[j] >= n_ || p[j] < 0 || p[j] >= n_) throw DomainError("RDM index out of range");
  }
  const int su = sort_with_sign(std::span(u.data(), k_));
  const int sp = sort_with_sign(std::span(p.data(), k_));
  if (su == 0 || sp == 0) return {};
  return static_cast<double>(su * sp) *
         data_(static_cast<Eigen::Index>(index_of(std::span(u.data(), k_))),
               static_cast<Eigen::Index>(index_of(std::span(p.data(), k_))));
}

void Rdm::set(std::span<const int> upper, std::span<const int> lower, Complex v) {
  if (static_cast<int>(upper.size()) != k_ || static_cast<int>(lower.size()) != k_) throw ShapeError("RDM index count differs from rank");
  Tuple u{}, p{};
  std::copy(upper.begin(), upper.end(), u.begin());
  std::copy(lower.begin(), lower.end(), p.begin());
  const int su = sort_with_sign(std::span(u.data(), k_));
  const int sp = sort_with_sign(std::span(p.data(), k_));
  if (su == 0 || sp == 0) return;
  data_(static_cast<Eigen::Index>(index_of(std::span(u.data(), k_))),
        static_cast<Eigen::Index>(index_of(std::span(p.data(), k_)))) = static_cast<double>(su * sp) * v;
}

Complex Rdm::trace() const {
  double fact = 1.0;
  for (int j = 2; j <= k_; ++j) fact *= j;
  return fact * data_.trace();
}

double Rdm::hermiticity_violation() const {
  if (data_.size() == 0) return 0.0;
  return (data_ - data_.adjoint()).cwiseAbs().maxCoeff();
}

void Rdm::hermitize() {
  const Eigen::MatrixXcd sym = 0.5 * (data_ + data_.adjoint());
  data_ = sym;
}

Rdm& Rdm::operator+=(const Rdm& o) {
  if (o.k_ != k_ || o.n_ != n_) throw ShapeError("RDM rank or size mismatch");
  data_ += o.data_;
  return *this;
}

Rdm& Rdm::operator-=(const Rdm& o) {
  if (o.k_ != k_ || o.n_ != n_) throw ShapeError("RDM rank or size mismatch");
  data_ -= o.data_;
  return *this;
}

Rdm& Rdm::operator*=(Complex s) {
  data_ *= s;
  return *this;
}

void Rdm::write_text(std::ostream& out) const {
  out << "# n=" << n_ << " N=" << n_electrons << " k=" << k_ << '\n';
  char buf[64];
  for (std::size_t a = 0; a < tuples_.size(); ++a)
    for (std::size_t b = 0; b < tuples_.size(); ++b) {
      const Complex v = data_(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      if (v == Complex{}) continue;
      out << k_;
      for (int j = 0; j < k_; ++j) out << ' ' << tuples_[a][j];
      for (int j = 0; j < k_; ++j) out << ' ' << tuples_[b][j];
      std::snprintf(buf, sizeof buf, " %.17e %.17e\n", v.real(), v.imag());
      out << buf;
    }
}

Rdm compute_rdm(const fci::Wavefunction& psi, int k) {
  if (k < 1 || k > kMaxRank) throw DomainError("compute_rdm: k must lie in [1, 4]");
  Rdm d(k, psi.n_spin_orbitals());
  d.n_electrons = psi.n_electrons();
  if (k > psi.n_electrons()) {
    d.exceeds_particle_number = true;
    return d;
  }
  // phi_P = a_p1 ... a_pk |psi>;  D^U_P = <phi_U|phi_P>.
  std::unordered_map<std::uint64_t, Eigen::Index> row_of;
  std::vector<std::vector<std::pair<Eigen::Index, Complex>>> cols(d.n_tuples());
  std::vector<fci::LadderOp> ops(k);
  for (std::size_t t = 0; t < d.n_tuples(); ++t) {
    for (int j = 0; j < k; ++j) ops[j] = fci::ann(d.tuples()[t][j]);
    for (const auto& [det, c] : psi) {
      const auto r = fci::apply_ladder_string(ops, det, psi.n_spin_orbitals());
      if (r.sign == 0) continue;
      auto [it, fresh] = row_of.emplace(r.det.bits, static_cast<Eigen::Index>(row_of.size()));
      cols[t].emplace_back(it->second, static_cast<double>(r.sign) * c);
    }
  }
  Eigen::MatrixXcd phi = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(row_of.size()), static_cast<Eigen::Index>(d.n_tuples()));
  for (std::size_t t = 0; t < cols.size(); ++t)
    for (const auto& [row, v] : cols[t]) phi(row, static_cast<Eigen::Index>(t)) += v;
  d.matrix() = phi.adjoint() * phi;
  return d;
}

Rdm partial_trace(const Rdm& d) {
  const int k = d.rank();
  if (k < 2) throw DomainError("partial_trace needs rank >= 2");
  Rdm out(k - 1, d.n());
  std::vector<int> u(k), p(k);
  for (std::size_t a = 0; a < out.n_tuples(); ++a)
    for (std::size_t b = 0; b < out.n_tuples(); ++b) {
      Complex s{};
      for (int x = 0; x < d.n(); ++x) {
        for (int j = 0; j < k - 1; ++j) {
          u[j] = out.tuples()[a][j];
          p[j] = out.tuples()[b][j];
        }
        u[k - 1] = x;
        p[k - 1] = x;
        s += d.get(u, p);
      }
      out.matrix()(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = s;
    }
  return out;
}

const Rdm& RdmSet::get(int k) const {
  if (!has(k)) throw MissingDataError(k);
  return *by_rank[k];
}

void RdmSet::put(Rdm d) {
  if (d.n() != n) throw ShapeError("RDM size differs from the set");
  const int k = d.rank();
  by_rank[k] = std::move(d);
}

RdmSet RdmSet::compute(const fci::Wavefunction& psi, int max_rank) {
  RdmSet set;
  set.n = psi.n_spin_orbitals();
  set.n_electrons = psi.n_electrons();
  for (int k = 1; k <= std::min(max_rank, kMaxRank); ++k) set.by_rank[k] = compute_rdm(psi, k);
  return set;
}

SpatialRdms spin_summed(const Rdm& d1, const Rdm& d2) {
  if (d1.rank() != 1 || d2.rank() != 2) throw ShapeError("spin_summed expects a 1-RDM and a 2-RDM");
  if (d1.n() != d2.n() || d1.n() % 2) throw ShapeError("RDM spin-orbital counts differ or are odd");
  const int m = d1.n() / 2;
  SpatialRdms out;
  out.n_spatial = m;
  out.gamma = Eigen::MatrixXd::Zero(m, m);
  out.Gamma.assign(static_cast<std::size_t>(m) * m * m * m, 0.0);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int s = 0; s < 2; ++s) {
        const int u[] = {2 * p + s};
        const int l[] = {2 * q + s};
        out.gamma(p, q) += d1.get(u, l).real();
      }
  // <a+_i a+_j a_k a_l> = D^{j i}_{k l} with i = ps, j = rt, k = st, l = qs.
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
          double v = 0.0;
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
              const int up[] = {2 * r + b, 2 * p + a};
              const int lo[] = {2 * s + b, 2 * q + a};
              v += d2.get(up, lo).real();
            }
          out.Gamma[((static_cast<std::size_t>(p) * m + q) * m + r) * m + s] = v;
        }
  return out;
}

double contract_energy(const integrals::MolecularIntegrals& mo, const SpatialRdms& rdms) {
  if (mo.n_spatial != rdms.n_spatial) throw ShapeError("integral and RDM orbital counts differ");
  const int m = mo.n_spatial;
  double e = mo.constant_energy();
  e += kernels::dot(std::span(mo.h1.data(), static_cast<std::size_t>(m) * m),
                    std::span(rdms.gamma.data(), static_cast<std::size_t>(m) * m));
  e += 0.5 * kernels::dot(mo.eri.data(), rdms.Gamma);
  return e;
}

double energy_from_rdms(const integrals::MolecularIntegrals& mo, const Rdm& d1, const Rdm& d2) {
  return contract_energy(mo, spin_summed(d1, d2));
}

}  // namespace qse::rdm
