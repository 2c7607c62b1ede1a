#include "qse/fci/wavefunction.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "qse/errors.hpp"

namespace qse::fci {

Wavefunction::Wavefunction(int n_spin_orbitals, int n_electrons)
    : n_spin_orbitals_(n_spin_orbitals), n_electrons_(n_electrons) {
  if (n_spin_orbitals < 0 || n_spin_orbitals >= kMaxSpinOrbitals) throw DomainError("unsupported spin-orbital count");
  if (n_electrons < 0 || n_electrons > n_spin_orbitals) throw DomainError("electron count outside [0, n_spin_orbitals]");
}

Complex Wavefunction::amplitude(Determinant d) const {
  auto it = amps_.find(d);
  return it == amps_.end() ? Complex{} : it->second;
}

void Wavefunction::set(Determinant d, Complex value) {
  if (d.n_electrons() != n_electrons_ || (d.bits >> n_spin_orbitals_) != 0) {
    throw DomainError("determinant outside the wavefunction's sector");
  }
  amps_[d] = value;
}

void Wavefunction::add(Determinant d, Complex value) {
  if (d.n_electrons() != n_electrons_ || (d.bits >> n_spin_orbitals_) != 0) {
    throw DomainError("determinant outside the wavefunction's sector");
  }
  amps_[d] += value;
}

double Wavefunction::norm() const {
  double s = 0.0;
  for (const auto& [d, c] : amps_) s += std::norm(c);
  return std::sqrt(s);
}

void Wavefunction::normalize() {
  const double n = norm();
  if (n == 0.0) throw DomainError("cannot normalize a zero wavefunction");
  scale(1.0 / n);
}

void Wavefunction::scale(Complex factor) {
  for (auto& [d, c] : amps_) c *= factor;
}

void Wavefunction::prune(double tol) {
  std::erase_if(amps_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

Complex Wavefunction::inner(const Wavefunction& other) const {
  Complex s{};
  const Map& small = amps_.size() <= other.amps_.size() ? amps_ : other.amps_;
  const bool this_small = &small == &amps_;
  for (const auto& [d, c] : small) {
    const Complex o = this_small ? other.amplitude(d) : amplitude(d);
    s += this_small ? std::conj(c) * o : std::conj(o) * c;
  }
  return s;
}

void Wavefunction::validate(double tol) const {
  for (const auto& [d, c] : amps_) {
    if (d.n_electrons() != n_electrons_ || (d.bits >> n_spin_orbitals_) != 0) {
      throw DomainError("determinant outside the declared sector");
    }
  }
  if (std::abs(norm() - 1.0) > tol) throw DomainError("wavefunction not normalized");
}

void Wavefunction::write_text(std::ostream& out) const {
  out << "# " << n_spin_orbitals_ << ' ' << n_electrons_ << '\n';
  char buf[96];
  for (const auto& [d, c] : amps_) {
    std::snprintf(buf, sizeof buf, "%llu %.17e %.17e\n", static_cast<unsigned long long>(d.bits), c.real(), c.imag());
    out << buf;
  }
}

Wavefunction Wavefunction::read_text(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  Wavefunction psi;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (!header) {
      std::string hash;
      int n = 0, ne = 0;
      if (!(ls >> hash >> n >> ne) || hash != "#") throw ParseError(lineno, "expected '# n_spin_orbitals n_electrons'");
      psi = Wavefunction(n, ne);
      header = true;
      continue;
    }
    unsigned long long bits = 0;
    double re = 0.0, im = 0.0;
    if (!(ls >> bits >> re >> im)) throw ParseError(lineno, "expected 'bitmask re im'");
    psi.set(Determinant{bits}, {re, im});
  }
  if (!header) throw ParseError(lineno, "missing header");
  return psi;
}

Wavefunction Wavefunction::determinant(int n_spin_orbitals, Determinant d) {
  Wavefunction psi(n_spin_orbitals, d.n_electrons());
  psi.set(d, 1.0);
  return psi;
}

Wavefunction apply_string(std::span<const LadderOp> ops, const Wavefunction& psi) {
  int shift = 0;
  for (const auto& op : ops) shift += op.dagger ? 1 : -1;
  const int ne = psi.n_electrons() + shift;
  const int n = psi.n_spin_orbitals();
  if (ne < 0 || ne > n) {
    // Still validate indices.
    for (const auto& op : ops)
      if (op.index < 0 || op.index >= n) throw DomainError("ladder operator index out of range");
    return Wavefunction(n, 0);
  }
  Wavefunction out(n, ne);
  for (const auto& [d, c] : psi) {
    const auto r = apply_ladder_string(ops, d, n);
    if (r.sign != 0) out.add(r.det, static_cast<double>(r.sign) * c);
  }
  return out;
}

Complex full_space_expectation(const Wavefunction& bra, std::span<const LadderOp> ops, const Wavefunction& ket) {
  if (bra.n_spin_orbitals() != ket.n_spin_orbitals()) throw ShapeError("bra and ket over different orbital counts");
  Complex s{};
  for (const auto& [d, c] : ket) {
    const auto r = apply_ladder_string(ops, d, ket.n_spin_orbitals());
    if (r.sign == 0) continue;
    s += std::conj(bra.amplitude(r.det)) * (static_cast<double>(r.sign) * c);
  }
  return s;
}

Complex full_space_expectation(const Wavefunction& bra, std::span<const OperatorTerm> terms, const Wavefunction& ket) {
  Complex s{};
  for (const auto& t : terms) s += t.coefficient * full_space_expectation(bra, std::span<const LadderOp>(t.ops), ket);
  return s;
}

}  // namespace qse::fci
