#include "qse/cli/diff.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qse/errors.hpp"

namespace qse::cli {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) out.push_back(f);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

bool parse_number(const std::string& s, double& v) {
  if (s.empty()) return false;
  char* end = nullptr;
  v = std::strtod(s.c_str(), &end);
  return end && *end == '\0';
}

}  // namespace

CurveTable CurveTable::read(std::istream& in) {
  CurveTable t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto cols = split(trim(line.substr(1)));
      if (cols.size() > 1) {
        t.columns.clear();
        for (auto& c : cols) t.columns.push_back(trim(c));
      }
      continue;
    }
    auto cells = split(line);
    for (auto& c : cells) c = trim(c);
    if (cells.size() != t.columns.size()) throw ParseError(lineno, "row has " + std::to_string(cells.size()) + " cells, header has " + std::to_string(t.columns.size()));
    t.rows.push_back(std::move(cells));
  }
  if (t.columns.empty()) throw ParseError(lineno, "no '#' header line naming the columns");
  return t;
}

CurveTable CurveTable::read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  return read(in);
}

int CurveTable::column(const std::string& name) const {
  for (std::size_t k = 0; k < columns.size(); ++k)
    if (columns[k] == name) return static_cast<int>(k);
  return -1;
}

DiffReport diff_curves(const CurveTable& a, const CurveTable& b, double tolerance) {
  const int ra = a.column("R_angstrom"), rb = b.column("R_angstrom");
  if (ra < 0 || rb < 0) throw ConfigError("both files need an R_angstrom column");
  if (a.rows.size() != b.rows.size()) throw ConfigError("R grids differ in length");
  std::vector<double> grid(a.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    double x = 0, y = 0;
    if (!parse_number(a.rows[i][ra], x) || !parse_number(b.rows[i][rb], y) || std::abs(x - y) > 1e-9)
      throw ConfigError("R grids differ at row " + std::to_string(i + 1));
    grid[i] = x;
  }

  DiffReport rep;
  for (std::size_t c = 0; c < a.columns.size(); ++c) {
    const auto& name = a.columns[c];
    if (static_cast<int>(c) == ra || name == "status") continue;
    const int cb = b.column(name);
    if (cb < 0) continue;
    ColumnDiff d{name};
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      const auto& sa = a.rows[i][c];
      const auto& sb = b.rows[i][cb];
      double x = 0, y = 0;
      const bool na = parse_number(sa, x) && std::isfinite(x), nb = parse_number(sb, y) && std::isfinite(y);
      if (!na || !nb) {
        if (sa != sb) rep.exceeded.push_back({name, grid[i], sa, sb});
        continue;
      }
      const double diff = std::abs(x - y);
      d.max_abs = std::max(d.max_abs, diff);
      sum += diff;
      ++d.compared;
      if (diff > tolerance) rep.exceeded.push_back({name, grid[i], sa, sb});
    }
    d.mean_abs = d.compared ? sum / d.compared : 0.0;
    rep.columns.push_back(d);
  }
  return rep;
}

void print_report(std::ostream& out, const DiffReport& report, double tolerance) {
  char buf[160];
  out << "# column,max_abs,mean_abs,compared\n";
  for (const auto& c : report.columns) {
    std::snprintf(buf, sizeof buf, "%s,%.3e,%.3e,%d\n", c.column.c_str(), c.max_abs, c.mean_abs, c.compared);
    out << buf;
  }
  for (const auto& m : report.exceeded) {
    std::snprintf(buf, sizeof buf, "exceeded %s at R=%.6f: '%s' vs '%s' (tol %.1e)\n", m.column.c_str(), m.r_angstrom,
                  m.a.c_str(), m.b.c_str(), tolerance);
    out << buf;
  }
}

}  // namespace qse::cli
