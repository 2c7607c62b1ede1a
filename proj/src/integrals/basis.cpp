#include "qse/integrals/basis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qse/errors.hpp"

namespace qse::integrals {
namespace {

int double_factorial_odd(int l) {  // (2l-1)!!
  int r = 1;
  for (int k = 2 * l - 1; k > 1; k -= 2) r *= k;
  return r;
}

double primitive_norm(double a, const std::array<int, 3>& p) {
  const int l = p[0] + p[1] + p[2];
  const double denom = double_factorial_odd(p[0]) * double_factorial_odd(p[1]) * double_factorial_odd(p[2]);
  return std::pow(2.0 * a / std::numbers::pi, 0.75) * std::pow(4.0 * a, 0.5 * l) / std::sqrt(denom);
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

BasisSet BasisSet::parse(std::istream& in, std::string name) {
  BasisSet basis(std::move(name));
  std::string line;
  std::size_t lineno = 0;
  std::string element;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "element") {
      if (!(ls >> element)) throw ParseError(lineno, "missing element symbol");
      continue;
    }
    if (head == "S" || head == "P" || head == "s" || head == "p") {
      if (element.empty()) throw ParseError(lineno, "shell before any 'element' line");
      int nprim = 0;
      if (!(ls >> nprim) || nprim <= 0) throw ParseError(lineno, "bad primitive count");
      Shell shell;
      shell.angular_momentum = (head == "S" || head == "s") ? 0 : 1;
      for (int k = 0; k < nprim; ++k) {
        if (!std::getline(in, line)) throw ParseError(lineno, "unexpected end of file inside shell");
        ++lineno;
        std::istringstream ps(line);
        Primitive p;
        if (!(ps >> p.exponent >> p.coefficient)) throw ParseError(lineno, "expected '<exponent> <coefficient>'");
        shell.primitives.push_back(p);
      }
      basis.add_shell(element, std::move(shell));
      continue;
    }
    if (head == "D" || head == "F" || head == "d" || head == "f") {
      throw UnsupportedFeature("line " + std::to_string(lineno) + ": angular momentum above p is not supported");
    }
    throw ParseError(lineno, "unrecognized line '" + line + "'");
  }
  basis.validate();
  return basis;
}

BasisSet BasisSet::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open basis file " + path.string());
  return parse(in, path.stem().string());
}

BasisSet BasisSet::load_named(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  std::filesystem::path dir = std::filesystem::path(QSE_DATA_DIR) / "basis";
  if (const char* env = std::getenv("QSE_BASIS_DIR")) dir = env;
  auto path = dir / (lower + ".basis");
  if (!std::filesystem::exists(path)) throw Error("unknown basis set '" + name + "' (looked for " + path.string() + ")");
  auto basis = load_file(path);
  basis.name_ = lower;
  return basis;
}

void BasisSet::add_shell(const std::string& element, Shell shell) { shells_[element].push_back(std::move(shell)); }

const std::vector<Shell>& BasisSet::shells(const std::string& element) const {
  auto it = shells_.find(element);
  if (it == shells_.end()) throw DomainError("basis set '" + name_ + "' has no entry for element " + element);
  return it->second;
}

void BasisSet::validate() const {
  for (const auto& [element, shells] : shells_) {
    for (const auto& shell : shells) {
      if (shell.angular_momentum < 0) throw DomainError("negative angular momentum");
      if (shell.angular_momentum > 1) throw UnsupportedFeature("angular momentum above p is not supported");
      if (shell.primitives.empty()) throw DomainError("empty shell for element " + element);
      for (const auto& p : shell.primitives) {
        if (!(p.exponent > 0.0)) throw DomainError("non-positive exponent for element " + element);
      }
    }
  }
}

std::vector<BasisFunction> build_basis_functions(const Geometry& geometry, const BasisSet& basis) {
  geometry.validate();
  basis.validate();
  std::vector<BasisFunction> out;
  for (std::size_t ia = 0; ia < geometry.atoms.size(); ++ia) {
    const auto& atom = geometry.atoms[ia];
    for (const auto& shell : basis.shells(atom.symbol)) {
      std::vector<std::array<int, 3>> components;
      if (shell.angular_momentum == 0) {
        components = {{0, 0, 0}};
      } else {
        components = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
      }
      for (const auto& powers : components) {
        BasisFunction bf;
        bf.center = atom.position;
        bf.powers = powers;
        bf.atom = static_cast<int>(ia);
        for (const auto& p : shell.primitives) {
          bf.exponents.push_back(p.exponent);
          bf.coefficients.push_back(p.coefficient * primitive_norm(p.exponent, powers));
        }
        // Normalize the contraction.
        const int l = shell.angular_momentum;
        const double df = double_factorial_odd(powers[0]) * double_factorial_odd(powers[1]) *
                          double_factorial_odd(powers[2]);
        double self = 0.0;
        for (std::size_t i = 0; i < bf.exponents.size(); ++i) {
          for (std::size_t j = 0; j < bf.exponents.size(); ++j) {
            const double p = bf.exponents[i] + bf.exponents[j];
            self += bf.coefficients[i] * bf.coefficients[j] * std::pow(std::numbers::pi / p, 1.5) * df /
                    std::pow(2.0 * p, l);
          }
        }
        const double scale = 1.0 / std::sqrt(self);
        for (auto& c : bf.coefficients) c *= scale;
        out.push_back(std::move(bf));
      }
    }
  }
  return out;
}

}  // namespace qse::integrals
