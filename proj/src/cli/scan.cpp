#include "qse/cli/scan.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "qse/errors.hpp"
#include "qse/integrals/basis.hpp"
#include "qse/oo/mcscf.hpp"
#include "qse/units.hpp"
#include "qse/vqse/pipeline.hpp"

namespace qse::cli {

using nlohmann::json;

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

json matrix_json(const Eigen::MatrixXcd& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<double> r, c;
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      r.push_back(m(i, k).real());
      c.push_back(m(i, k).imag());
    }
    re.push_back(r);
    im.push_back(c);
  }
  return {{"re", re}, {"im", im}};
}

json trace_json(const oo::RelaxationReport& r) {
  return {{"initial_energy", r.initial_energy}, {"final_energy", r.final_energy}, {"energy_trace", r.energy_trace},
          {"sweeps", r.sweeps},                 {"evaluations", r.evaluations},   {"converged", r.converged},
          {"budget_exhausted", r.budget_exhausted}};
}

// Runs f; on failure records the message and stores NaN.
template <class F>
void guarded(const char* name, CurveRow& row, json& rep, std::optional<double>& cell, F&& f) {
  try {
    cell = f();
  } catch (const std::exception& e) {
    cell = kNan;
    row.failures.push_back(std::string(name) + ": " + e.what());
    rep[name] = {{"error", e.what()}};
  }
}

std::pair<CurveRow, json> run_point(const ScanConfig& cfg, const integrals::BasisSet& basis, std::size_t index) {
  CurveRow row;
  row.r_angstrom = cfg.points[index];
  json rep = {{"R_angstrom", row.r_angstrom}};
  const auto& m = cfg.methods;
  try {
    const auto geom = integrals::Geometry::diatomic(cfg.atom_a, cfg.atom_b, units::angstrom_to_bohr(row.r_angstrom));
    const auto sys = vqse::prepare_system(geom, basis, cfg.charge);
    rep["scf"] = {{"energy", sys.scf.scf_energy}, {"converged", sys.scf.converged}, {"iterations", sys.scf.iterations}};
    rep["n_spatial"] = sys.mo.n_spatial;
    auto part = cfg.partition.resolve(sys.mo.n_spatial);
    if (m.excited_active) part.active_excited = *m.excited_active;
    part.validate(sys.mo.n_spatial);

    guarded("ref", row, rep, row.e_ref, [&] {
      const auto act = vqse::solve_active_space(sys.mo, part, sys.n_electrons);
      rep["ref"] = {{"energy", act.ground.energy}, {"gap", act.ground.gap}, {"sector_size", act.ground.sector_size}};
      return act.ground.energy;
    });

    if (m.vqse) {
      guarded("vqse", row, rep, row.e_vqse, [&] {
        vqse::VqseOptions opt;
        opt.epsilon = m.epsilon;
        opt.rdm_mode = m.cumulant_rank == 0 ? vqse::RdmMode::Exact : vqse::RdmMode::Cumulant;
        if (m.cumulant_rank) opt.cumulant_rank = m.cumulant_rank;
        opt.shots = m.shots;
        opt.seed = m.seed + index;
        const auto v = vqse::run_vqse(sys.mo, part, sys.n_electrons, opt);
        json j = {{"energy", v.e_vqse},
                  {"pool_size", v.pool_size},
                  {"retained", v.retained},
                  {"h_asymmetry", v.subspace.h_asymmetry},
                  {"s_asymmetry", v.subspace.s_asymmetry},
                  {"max_residual", v.gevp.max_residual}};
        if (v.e_first_excited) j["first_excited"] = *v.e_first_excited;
        if (cfg.output.matrices) {
          j["H"] = matrix_json(v.subspace.H);
          j["S"] = matrix_json(v.subspace.S);
        }
        rep["vqse"] = j;
        return v.e_vqse;
      });
    }

    if (m.oo != OoMode::None) {
      guarded("oo", row, rep, row.e_oo, [&] {
        oo::SweepOptions sweep;
        if (m.local_angles) sweep.angle_search = oo::AngleSearch::Local;
        if (m.oo == OoMode::Iterate) {
          const auto r = oo::relax_then_resolve(sys.mo, part, sys.n_electrons, m.oo_cycles, sweep);
          json cyc = json::array();
          for (const auto& c : r.cycles) cyc.push_back({{"active", c.active_energy}, {"relaxed", c.relaxed_energy}});
          rep["oo"] = {{"mode", "iterate"}, {"cycles", cyc}, {"energy", r.energy}};
          return r.energy;
        }
        const auto mode = m.oo == OoMode::Joint ? oo::RelaxMode::Joint : oo::RelaxMode::Sweep;
        const auto r = oo::relax_once(sys.mo, part, sys.n_electrons, mode, sweep);
        rep["oo"] = {{"mode", to_string(m.oo)}, {"active_energy", r.active_energy}, {"report", trace_json(r.relaxation.report)}};
        return r.relaxed_energy;
      });
    }

    if (m.full_fci) {
      guarded("fci_full", row, rep, row.e_fci_full, [&] {
        const auto g = vqse::full_fci(sys.mo, sys.n_electrons);
        rep["fci_full"] = {{"energy", g.energy}, {"sector_size", g.sector_size}};
        return g.energy;
      });
    }
  } catch (const std::exception& e) {
    // Setup failed: every enabled cell fails.
    row.failures.push_back(std::string("setup: ") + e.what());
    rep["error"] = e.what();
    row.e_ref = kNan;
    if (m.vqse) row.e_vqse = kNan;
    if (m.oo != OoMode::None) row.e_oo = kNan;
    if (m.full_fci) row.e_fci_full = kNan;
  }
  rep["status"] = row.ok() ? "ok" : "failed";
  return {row, rep};
}

std::string cell(const std::optional<double>& v) {
  if (!v) return "";
  if (!std::isfinite(*v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12f", *v);
  return buf;
}

std::optional<double> difference(const std::optional<double>& a, const std::optional<double>& b) {
  if (!a || !b) return std::nullopt;
  return *a - *b;
}

}  // namespace

bool ScanResult::all_ok() const {
  for (const auto& r : rows)
    if (!r.ok()) return false;
  return true;
}

ScanResult run_scan(const ScanConfig& config, int threads) {
  config.validate();
  const auto basis = integrals::BasisSet::load_named(config.basis);
  const std::size_t n = config.points.size();
  std::vector<std::pair<CurveRow, json>> out(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < n; k = next++) out[k] = run_point(config, basis, k);
  };
  const int t = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  if (t == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < t; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  ScanResult res;
  res.reports = json::array();
  for (auto& [row, rep] : out) {
    res.rows.push_back(std::move(row));
    res.reports.push_back(std::move(rep));
  }
  return res;
}

void write_csv(std::ostream& out, const std::vector<CurveRow>& rows) {
  out << "# R in angstrom; energies and errors in hartree; errors relative to E_fci_full\n";
  out << "# R_angstrom,E_ref,E_vqse,E_oo,E_fci_full,err_ref,err_vqse,err_oo,status\n";
  for (const auto& r : rows) {
    char rb[32];
    std::snprintf(rb, sizeof rb, "%.6f", r.r_angstrom);
    std::string status = "ok";
    if (!r.ok()) {
      status = "failed:";
      for (std::size_t k = 0; k < r.failures.size(); ++k) {
        const auto name = r.failures[k].substr(0, r.failures[k].find(':'));
        status += (k ? "|" : "") + name;
      }
    }
    out << rb << ',' << cell(r.e_ref) << ',' << cell(r.e_vqse) << ',' << cell(r.e_oo) << ',' << cell(r.e_fci_full)
        << ',' << cell(difference(r.e_ref, r.e_fci_full)) << ',' << cell(difference(r.e_vqse, r.e_fci_full)) << ','
        << cell(difference(r.e_oo, r.e_fci_full)) << ',' << status << '\n';
  }
}

json sidecar(const ScanConfig& config, const ScanResult& result) {
  json failures = json::array();
  for (const auto& r : result.rows)
    for (const auto& f : r.failures) failures.push_back({{"R_angstrom", r.r_angstrom}, {"message", f}});
  return {{"config", config.to_json()}, {"points", result.reports}, {"failures", failures}};
}

void write_outputs(const ScanConfig& config, const ScanResult& result) {
  const std::filesystem::path dir(config.output.directory);
  std::filesystem::create_directories(dir);
  {
    std::ofstream csv(dir / (config.output.stem + ".csv"));
    if (!csv) throw Error("cannot write " + (dir / (config.output.stem + ".csv")).string());
    write_csv(csv, result.rows);
  }
  std::ofstream js(dir / (config.output.stem + ".json"));
  if (!js) throw Error("cannot write " + (dir / (config.output.stem + ".json")).string());
  js << sidecar(config, result).dump(2) << '\n';
}

}  // namespace qse::cli
