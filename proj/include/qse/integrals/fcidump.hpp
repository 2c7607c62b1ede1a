#pragma once

#include <filesystem>
#include <iosfwd>

#include "qse/integrals/mo_integrals.hpp"

namespace qse::integrals {

struct FcidumpData {
  MolecularIntegrals integrals;  ///< scalar line stored in e_nuc
  int n_electrons = 0;
  int ms2 = 0;
};

/// Reads the FCIDUMP format: a `&FCI NORB=..,NELEC=..,MS2=..,` namelist closed
/// by `&END` or `/`, then `<value> i j k l` lines with 1-based chemist indices.
/// `k = l = 0` gives h_ij, all zero gives the scalar; `i 0 0 0` orbital-energy
/// lines are skipped. Fortran `D` exponents are accepted. Throws ParseError
/// with the offending line number.
FcidumpData parse_fcidump(std::istream& in);
FcidumpData read_fcidump(const std::filesystem::path& path);

/// Writes unique elements (i>=j, k>=l, ij>=kl) with 17 significant digits.
/// The scalar line carries constant_energy().
void write_fcidump(const MolecularIntegrals& integrals, int n_electrons, int ms2, std::ostream& out);
void write_fcidump(const MolecularIntegrals& integrals, int n_electrons, int ms2, const std::filesystem::path& path);

}  // namespace qse::integrals
