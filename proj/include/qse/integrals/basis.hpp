#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qse/integrals/geometry.hpp"

namespace qse::integrals {

struct Primitive {
  double exponent = 0.0;     ///< bohr^-2
  double coefficient = 0.0;  ///< with respect to normalized primitives
};

struct Shell {
  int angular_momentum = 0;  ///< 0 = s, 1 = p
  std::vector<Primitive> primitives;
};

/// Per-element contracted shells.
///
/// Text format: `element <symbol>` opens a block; `S <n>` or `P <n>` starts a
/// shell followed by n lines `<exponent> <coefficient>`. `#` starts a comment.
class BasisSet {
 public:
  BasisSet() = default;
  explicit BasisSet(std::string name) : name_(std::move(name)) {}

  static BasisSet parse(std::istream& in, std::string name = {});
  static BasisSet load_file(const std::filesystem::path& path);
  /// Looks up `<name>.basis` (lower-cased) in the bundled data directory, or
  /// in $QSE_BASIS_DIR when set.
  static BasisSet load_named(const std::string& name);

  void add_shell(const std::string& element, Shell shell);
  const std::vector<Shell>& shells(const std::string& element) const;
  bool has_element(const std::string& element) const { return shells_.count(element) != 0; }
  const std::string& name() const { return name_; }

  /// Throws DomainError for non-positive exponents or empty shells and
  /// UnsupportedFeature for angular momentum above p.
  void validate() const;

 private:
  std::string name_;
  std::map<std::string, std::vector<Shell>> shells_;
};

/// One Cartesian contracted Gaussian centred on an atom. Coefficients already
/// include primitive and contraction normalization.
struct BasisFunction {
  Vec3 center{};
  std::array<int, 3> powers{};  ///< (lx, ly, lz)
  std::vector<double> exponents;
  std::vector<double> coefficients;
  int atom = 0;
};

/// Expands the basis on every atom in input order: per atom its shells in
/// file order, p shells as (x, y, z).
std::vector<BasisFunction> build_basis_functions(const Geometry& geometry, const BasisSet& basis);

}  // namespace qse::integrals
