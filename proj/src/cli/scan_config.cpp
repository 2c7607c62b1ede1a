#include "qse/cli/scan_config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "qse/errors.hpp"

namespace qse::cli {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) throw ConfigError("unknown key '" + k + "' in " + where);
  }
}

template <class T>
T take(const json& j, const char* key, T fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("bad value for '" + std::string(key) + "' in " + where);
  }
}

OoMode parse_oo(const std::string& s) {
  if (s == "none") return OoMode::None;
  if (s == "sweep") return OoMode::Sweep;
  if (s == "joint") return OoMode::Joint;
  if (s == "iterate") return OoMode::Iterate;
  throw ConfigError("oo must be none, sweep, joint or iterate");
}

}  // namespace

std::string to_string(OoMode mode) {
  switch (mode) {
    case OoMode::None: return "none";
    case OoMode::Sweep: return "sweep";
    case OoMode::Joint: return "joint";
    case OoMode::Iterate: return "iterate";
  }
  return "none";
}

integrals::OrbitalPartition PartitionSpec::resolve(int n_spatial) const {
  integrals::OrbitalPartition p;
  if (use_counts) {
    if (n_core + n_active > n_spatial) throw ConfigError("partition counts exceed the orbital count");
    p = integrals::OrbitalPartition::from_counts(n_core, n_active, n_virtual, n_spatial);
  } else {
    p.core = core;
    p.active = active;
    p.virtuals = virtuals;
  }
  p.validate(n_spatial);
  return p;
}

ScanConfig ScanConfig::from_json(const json& j) {
  reject_unknown(j, {"molecule", "scan", "basis", "partition", "methods", "output"}, "config");
  ScanConfig c;

  if (j.contains("molecule")) {
    const auto& m = j["molecule"];
    reject_unknown(m, {"atoms", "charge"}, "molecule");
    const auto atoms = take<std::vector<std::string>>(m, "atoms", {"H", "H"}, "molecule");
    if (atoms.size() != 2) throw ConfigError("molecule.atoms must name exactly two atoms");
    c.atom_a = atoms[0];
    c.atom_b = atoms[1];
    c.charge = take<int>(m, "charge", 0, "molecule");
  }

  if (!j.contains("scan")) throw ConfigError("missing 'scan'");
  const auto& s = j["scan"];
  reject_unknown(s, {"variable", "unit", "points", "start", "stop", "step"}, "scan");
  if (take<std::string>(s, "variable", "bond_length", "scan") != "bond_length")
    throw ConfigError("the only scan variable is bond_length");
  if (take<std::string>(s, "unit", "angstrom", "scan") != "angstrom") throw ConfigError("scan.unit must be angstrom");
  if (s.contains("points")) {
    if (s.contains("start")) throw ConfigError("give either scan.points or scan.start/stop/step");
    c.points = take<std::vector<double>>(s, "points", {}, "scan");
  } else {
    const double start = take<double>(s, "start", 0.0, "scan");
    const double stop = take<double>(s, "stop", 0.0, "scan");
    const double step = take<double>(s, "step", 0.0, "scan");
    if (!(step > 0.0) || stop < start) throw ConfigError("scan range needs step > 0 and stop >= start");
    const auto n = static_cast<int>(std::floor((stop - start) / step + 1e-9));
    // Rounded to 1e-10 so 0.3 + 0.1 k prints as written.
    for (int k = 0; k <= n; ++k) c.points.push_back(std::round((start + k * step) * 1e10) / 1e10);
  }

  c.basis = take<std::string>(j, "basis", c.basis, "config");

  if (j.contains("partition")) {
    const auto& p = j["partition"];
    reject_unknown(p, {"core", "active", "virtual"}, "partition");
    const bool lists = (p.contains("active") && p["active"].is_array());
    c.partition.use_counts = !lists;
    if (lists) {
      c.partition.core = take<std::vector<int>>(p, "core", {}, "partition");
      c.partition.active = take<std::vector<int>>(p, "active", {}, "partition");
      c.partition.virtuals = take<std::vector<int>>(p, "virtual", {}, "partition");
    } else {
      c.partition.n_core = take<int>(p, "core", 0, "partition");
      c.partition.n_active = take<int>(p, "active", 2, "partition");
      c.partition.n_virtual = take<int>(p, "virtual", -1, "partition");
    }
  }

  if (j.contains("methods")) {
    const auto& m = j["methods"];
    reject_unknown(m,
                   {"vqse", "cumulant_rank", "excited_active", "oo", "oo_cycles", "angle_search", "shots", "seed",
                    "epsilon", "full_fci"},
                   "methods");
    auto& f = c.methods;
    f.vqse = take<bool>(m, "vqse", f.vqse, "methods");
    f.cumulant_rank = take<int>(m, "cumulant_rank", f.cumulant_rank, "methods");
    if (m.contains("excited_active") && !m["excited_active"].is_null())
      f.excited_active = take<std::vector<int>>(m, "excited_active", {}, "methods");
    f.oo = parse_oo(take<std::string>(m, "oo", "none", "methods"));
    f.oo_cycles = take<int>(m, "oo_cycles", f.oo_cycles, "methods");
    const auto search = take<std::string>(m, "angle_search", "global", "methods");
    if (search != "global" && search != "local") throw ConfigError("angle_search must be global or local");
    f.local_angles = search == "local";
    if (m.contains("shots") && !m["shots"].is_null()) f.shots = take<double>(m, "shots", 0.0, "methods");
    f.seed = take<std::uint64_t>(m, "seed", f.seed, "methods");
    f.epsilon = take<double>(m, "epsilon", f.epsilon, "methods");
    f.full_fci = take<bool>(m, "full_fci", f.full_fci, "methods");
  }

  if (j.contains("output")) {
    const auto& o = j["output"];
    reject_unknown(o, {"directory", "stem", "matrices"}, "output");
    c.output.directory = take<std::string>(o, "directory", c.output.directory, "output");
    c.output.stem = take<std::string>(o, "stem", c.output.stem, "output");
    c.output.matrices = take<bool>(o, "matrices", c.output.matrices, "output");
  }
  c.validate();
  return c;
}

ScanConfig ScanConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  // A scan sidecar carries its resolved config.
  if (j.is_object() && j.contains("config") && j.contains("points")) return from_json(j["config"]);
  return from_json(j);
}

void ScanConfig::validate() const {
  if (points.empty()) throw ConfigError("scan has no points");
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (!(points[k] > 0.0) || !std::isfinite(points[k])) throw ConfigError("bond lengths must be positive");
    if (k && !(points[k] > points[k - 1])) throw ConfigError("scan points must be strictly increasing");
  }
  if (methods.cumulant_rank != 0 && methods.cumulant_rank != 2 && methods.cumulant_rank != 3)
    throw ConfigError("cumulant_rank must be 0, 2 or 3");
  if (methods.oo_cycles < 1) throw ConfigError("oo_cycles must be at least 1");
  if (methods.shots && !(*methods.shots > 0.0)) throw ConfigError("shots must be positive");
  if (!(methods.epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (output.stem.empty()) throw ConfigError("output.stem is empty");
}

json ScanConfig::to_json() const {
  json j;
  j["molecule"] = {{"atoms", {atom_a, atom_b}}, {"charge", charge}};
  j["scan"] = {{"variable", "bond_length"}, {"unit", "angstrom"}, {"points", points}};
  j["basis"] = basis;
  if (partition.use_counts)
    j["partition"] = {{"core", partition.n_core}, {"active", partition.n_active}, {"virtual", partition.n_virtual}};
  else
    j["partition"] = {{"core", partition.core}, {"active", partition.active}, {"virtual", partition.virtuals}};
  json m = {{"vqse", methods.vqse},         {"cumulant_rank", methods.cumulant_rank},
            {"oo", to_string(methods.oo)},  {"oo_cycles", methods.oo_cycles},
            {"seed", methods.seed},         {"epsilon", methods.epsilon},
            {"full_fci", methods.full_fci}};
  m["excited_active"] = methods.excited_active ? json(*methods.excited_active) : json(nullptr);
  m["shots"] = methods.shots ? json(*methods.shots) : json(nullptr);
  m["angle_search"] = methods.local_angles ? "local" : "global";
  j["methods"] = m;
  j["output"] = {{"directory", output.directory}, {"stem", output.stem}, {"matrices", output.matrices}};
  return j;
}

}  // namespace qse::cli
