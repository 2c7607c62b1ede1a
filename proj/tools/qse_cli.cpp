// Command-line driver: bond-length scans, curve diffs, FCIDUMP bridging.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "qse/cli/diff.hpp"
#include "qse/cli/scan.hpp"
#include "qse/errors.hpp"
#include "qse/fci/solver.hpp"
#include "qse/integrals/basis.hpp"
#include "qse/integrals/fcidump.hpp"
#include "qse/units.hpp"
#include "qse/vqse/pipeline.hpp"

namespace {

int run_scan(const std::string& config_path, const std::string& output, int threads, std::optional<std::uint64_t> seed) {
  auto cfg = qse::cli::ScanConfig::load(config_path);
  if (!output.empty()) cfg.output.directory = output;
  if (seed) cfg.methods.seed = *seed;
  const auto res = qse::cli::run_scan(cfg, threads);
  qse::cli::write_outputs(cfg, res);
  std::size_t failed = 0;
  for (const auto& r : res.rows)
    if (!r.ok()) {
      ++failed;
      for (const auto& f : r.failures) std::fprintf(stderr, "R=%.4f %s\n", r.r_angstrom, f.c_str());
    }
  std::printf("%zu points, %zu failed -> %s/%s.csv\n", res.rows.size(), failed, cfg.output.directory.c_str(),
              cfg.output.stem.c_str());
  return failed ? 1 : 0;
}

int run_diff(double tol, const std::string& a, const std::string& b) {
  const auto ta = qse::cli::CurveTable::read(a);
  const auto tb = qse::cli::CurveTable::read(b);
  const auto rep = qse::cli::diff_curves(ta, tb, tol);
  qse::cli::print_report(std::cout, rep, tol);
  return rep.exceeded.empty() ? 0 : 1;
}

int run_export(const std::string& basis, const std::string& atom_a, const std::string& atom_b, double bond,
               const std::string& output) {
  const auto geom = qse::integrals::Geometry::diatomic(atom_a, atom_b, qse::units::angstrom_to_bohr(bond));
  const auto sys = qse::vqse::prepare_system(geom, qse::integrals::BasisSet::load_named(basis));
  qse::integrals::write_fcidump(sys.mo, sys.n_electrons, 0, std::filesystem::path(output));
  std::printf("scf_energy %.12f\n", sys.scf.scf_energy);
  return 0;
}

int run_import(const std::string& path) {
  const auto data = qse::integrals::read_fcidump(path);
  const qse::fci::HamiltonianAction h(data.integrals);
  // Aufbau determinant: lowest orbitals, alpha and beta alternating.
  const int na = (data.n_electrons + data.ms2) / 2, nb = (data.n_electrons - data.ms2) / 2;
  std::uint64_t bits = 0;
  for (int p = 0; p < na; ++p) bits |= std::uint64_t{1} << (2 * p);
  for (int p = 0; p < nb; ++p) bits |= std::uint64_t{1} << (2 * p + 1);
  qse::fci::GroundStateOptions opt;
  opt.sz2 = data.ms2;
  const auto gs = qse::fci::ground_state(h, data.n_electrons, opt);
  std::printf("norb %d\nnelec %d\nms2 %d\n", data.integrals.n_spatial, data.n_electrons, data.ms2);
  std::printf("reference_energy %.12f\nfci_energy %.12f\n", h.diagonal(qse::fci::Determinant{bits}), gs.energy);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virtual quantum subspace expansion for small molecules"};
  app.require_subcommand(1);

  std::string config, output;
  int threads = 1;
  std::optional<std::uint64_t> seed;
  auto* scan = app.add_subcommand("scan", "run a bond-length scan");
  scan->add_option("--config", config, "JSON scan config")->required()->check(CLI::ExistingFile);
  scan->add_option("--output", output, "output directory (overrides the config)");
  scan->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--seed", seed, "noise seed (overrides the config)");

  double tol = 1e-8;
  std::string file_a, file_b;
  auto* diff = app.add_subcommand("diff", "compare two scan CSV files");
  diff->add_option("--tol", tol, "absolute tolerance, hartree")->required();
  diff->add_option("A", file_a)->required()->check(CLI::ExistingFile);
  diff->add_option("B", file_b)->required()->check(CLI::ExistingFile);

  auto* fd = app.add_subcommand("fcidump", "FCIDUMP export and import");
  fd->require_subcommand(1);
  std::string basis = "sto-3g", atom_a = "H", atom_b = "H", fd_out;
  double bond = 0.7414;
  auto* exp = fd->add_subcommand("export", "write MO integrals of a diatomic");
  exp->add_option("--basis", basis);
  exp->add_option("--atom1", atom_a, "first atom")->default_str("H");
  exp->add_option("--atom2", atom_b, "second atom")->default_str("H");
  exp->add_option("--bond", bond, "bond length, angstrom")->check(CLI::PositiveNumber);
  exp->add_option("--output", fd_out)->required();
  std::string fd_in;
  auto* imp = fd->add_subcommand("import", "read an FCIDUMP and print its energies");
  imp->add_option("file", fd_in)->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*scan) return run_scan(config, output, threads, seed);
    if (*diff) return run_diff(tol, file_a, file_b);
    if (*exp) return run_export(basis, atom_a, atom_b, bond, fd_out);
    if (*imp) return run_import(fd_in);
  } catch (const qse::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
