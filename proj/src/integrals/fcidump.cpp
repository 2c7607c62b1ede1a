#include "qse/integrals/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include "qse/errors.hpp"

namespace qse::integrals {
namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  return s;
}

bool header_closed(const std::string& line) {
  const std::string u = upper(line);
  if (u.find("&END") != std::string::npos) return true;
  const auto last = u.find_last_not_of(" \t\r");
  return last != std::string::npos && u[last] == '/';
}

std::optional<int> header_int(const std::string& header, const std::string& key) {
  const std::regex re("(^|[^A-Z0-9_])" + key + "\\s*=\\s*(-?\\d+)");
  std::smatch m;
  if (std::regex_search(header, m, re)) return std::stoi(m[2].str());
  return std::nullopt;
}

}  // namespace

FcidumpData parse_fcidump(std::istream& in) {
  std::string line, header;
  std::size_t lineno = 0;
  bool closed = false;
  while (std::getline(in, line)) {
    ++lineno;
    header += " " + upper(line);
    if (lineno == 1 && header.find("&FCI") == std::string::npos) throw ParseError(lineno, "expected '&FCI' namelist");
    if (header_closed(line)) {
      closed = true;
      break;
    }
  }
  if (!closed) throw ParseError(lineno, "namelist not terminated by &END or /");
  const auto norb = header_int(header, "NORB");
  const auto nelec = header_int(header, "NELEC");
  if (!norb || *norb < 0) throw ParseError(1, "missing or invalid NORB");
  if (!nelec || *nelec < 0) throw ParseError(1, "missing or invalid NELEC");

  FcidumpData data;
  const int n = *norb;
  data.n_electrons = *nelec;
  data.ms2 = header_int(header, "MS2").value_or(0);
  auto& mo = data.integrals;
  mo.n_spatial = n;
  mo.h1 = Eigen::MatrixXd::Zero(n, n);
  mo.eri = EriTensor(n);

  while (std::getline(in, line)) {
    ++lineno;
    std::replace(line.begin(), line.end(), 'D', 'E');
    std::replace(line.begin(), line.end(), 'd', 'e');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    double v = 0.0;
    long i = 0, j = 0, k = 0, l = 0;
    if (!(ls >> v >> i >> j >> k >> l)) throw ParseError(lineno, "expected '<value> i j k l'");
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing characters '" + extra + "'");
    for (long idx : {i, j, k, l}) {
      if (idx < 0 || idx > n) throw ParseError(lineno, "index " + std::to_string(idx) + " outside [0, NORB]");
    }
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      mo.e_nuc = v;
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      mo.eri.set_symmetric(i - 1, j - 1, k - 1, l - 1, v);
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      mo.h1(i - 1, j - 1) = v;
      mo.h1(j - 1, i - 1) = v;
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      continue;  // orbital energy
    } else {
      throw ParseError(lineno, "unrecognized index pattern");
    }
  }
  return data;
}

FcidumpData read_fcidump(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open FCIDUMP file " + path.string());
  return parse_fcidump(in);
}

void write_fcidump(const MolecularIntegrals& mo, int n_electrons, int ms2, std::ostream& out) {
  const int n = mo.n_spatial;
  out << "&FCI NORB=" << n << ",NELEC=" << n_electrons << ",MS2=" << ms2 << ",\n ORBSYM=";
  for (int p = 0; p < n; ++p) out << "1,";
  out << "\n ISYM=1,\n&END\n";
  char buf[96];
  auto emit = [&](double v, int i, int j, int k, int l) {
    std::snprintf(buf, sizeof buf, "%24.17e %4d %4d %4d %4d\n", v, i, j, k, l);
    out << buf;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const int ij = i * (i + 1) / 2 + j;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l <= k; ++l) {
          const int kl = k * (k + 1) / 2 + l;
          if (kl > ij) continue;
          const double v = mo.eri(i, j, k, l);
          if (v != 0.0) emit(v, i + 1, j + 1, k + 1, l + 1);
        }
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (mo.h1(i, j) != 0.0) emit(mo.h1(i, j), i + 1, j + 1, 0, 0);
  emit(mo.constant_energy(), 0, 0, 0, 0);
}

void write_fcidump(const MolecularIntegrals& mo, int n_electrons, int ms2, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write FCIDUMP file " + path.string());
  write_fcidump(mo, n_electrons, ms2, out);
}

}  // namespace qse::integrals
