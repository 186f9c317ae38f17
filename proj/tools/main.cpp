#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "jobs.hpp"

namespace {

using psharm::cli::Command;
using psharm::cli::JobSpec;

struct CoeffFlags {
  double a1 = 0, a2 = 0, a3 = 0;
  double De = 0, re = 0;
  bool has_a1 = false, has_de = false;
  std::string molecules, molecule;
  double hbar = 1.0, mass = 1.0;
  bool has_units = false;
};

void add_coeff_options(CLI::App* cmd, CoeffFlags& f) {
  auto* a1 = cmd->add_option("--a1", f.a1, "r^2 coefficient");
  cmd->add_option("--a2", f.a2, "1/r^2 coefficient");
  cmd->add_option("--a3", f.a3, "constant offset");
  auto* de = cmd->add_option("--De", f.De, "dissociation energy");
  auto* re = cmd->add_option("--re", f.re, "equilibrium distance");
  de->needs(re);
  cmd->add_option("--molecules", f.molecules,
                  "molecule file (line-oriented key/value records)");
  cmd->add_option("--molecule", f.molecule, "record key in --molecules");
  auto* hb = cmd->add_option("--hbar", f.hbar, "reduced Planck constant");
  auto* ms = cmd->add_option("--mass", f.mass, "particle mass");
  cmd->callback([&f, a1, de, hb, ms]() {
    f.has_a1 = a1->count() > 0;
    f.has_de = de->count() > 0;
    f.has_units = hb->count() > 0 || ms->count() > 0;
  });
}

void apply_coeffs(const CoeffFlags& f, JobSpec& job) {
  if (f.has_units) job.units = psharm::UnitSystem{f.hbar, f.mass};
  if (f.has_a1) {
    psharm::CoefficientSet c{f.a1, f.a2, f.a3,
                             job.units.value_or(psharm::UnitSystem{})};
    job.inline_coeffs = c;
  }
  if (f.has_de) job.molecular = psharm::MolecularParams{f.De, f.re};
  if (!f.molecules.empty()) {
    job.molecule_file = f.molecules;
    job.molecule_key = f.molecule;
  }
}

void add_tolerance_options(CLI::App* cmd, psharm::verify::Tolerances& t) {
  cmd->add_option("--tol-norm", t.normalization, "normalization tolerance");
  cmd->add_option("--tol-ortho", t.orthogonality, "orthogonality tolerance");
  cmd->add_option("--tol-residual", t.residual_exact,
                  "radial-equation residual tolerance");
  cmd->add_option("--tol-residual-detuned", t.residual_detuned,
                  "detuned-residual floor");
  cmd->add_option("--tol-ladder", t.ladder_pointwise,
                  "ladder pointwise tolerance");
  cmd->add_option("--tol-algebra", t.algebra, "algebra closure tolerance");
  cmd->add_option("--tol-oracle", t.oracle_rel,
                  "closed-form vs oracle relative tolerance");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudoharmonic N-dimensional bound states: closed-form "
               "spectra, radial eigenfunctions, SU(1,1) ladder algebra and "
               "finite-difference verification"};
  app.require_subcommand(1);

  JobSpec job;
  CoeffFlags flags;
  std::string preset;

  auto add_common = [&](CLI::App* cmd) {
    add_coeff_options(cmd, flags);
    cmd->add_option("--format", job.format, "csv | json | pretty");
    cmd->add_option("--out", job.out_path, "output path (default stdout)");
  };

  auto* spectrum = app.add_subcommand("spectrum", "closed-form level table");
  add_common(spectrum);
  spectrum->add_option("--n-max", job.n_max, "largest radial quantum number");
  spectrum->add_option("--ell-max", job.ell_max, "largest angular momentum");
  spectrum->add_option("--dims", job.dims, "spatial dimensions (N >= 2)")
      ->delimiter(',');

  auto* wavefunction =
      app.add_subcommand("wavefunction", "sample one radial eigenfunction");
  add_common(wavefunction);
  wavefunction->add_option("--n", job.n, "radial quantum number");
  wavefunction->add_option("--ell", job.ell, "angular momentum");
  wavefunction->add_option("--dims", job.dims, "spatial dimension")
      ->delimiter(',');
  wavefunction->add_option("--samples", job.samples, "sample count");
  wavefunction->add_option("--r-max", job.r_max,
                           "sampling radius (default automatic)");

  auto* ladder = app.add_subcommand(
      "ladder", "ladder-operator verification report per (eta, N)");
  add_common(ladder);
  ladder->add_option("--n-max", job.n_max, "largest basis index in tables");
  ladder->add_option("--ell-max", job.ell_max, "largest angular momentum");
  ladder->add_option("--dims", job.dims, "spatial dimensions")->delimiter(',');

  auto* verify = app.add_subcommand(
      "verify", "run the full verification network (exit 2 on breach)");
  add_common(verify);
  verify->add_option("--preset", preset,
                     "named coefficient preset: harmonic | pseudoharmonic");
  verify->add_option("--n-max", job.verify_opts.n_max,
                     "largest radial quantum number");
  verify->add_option("--ell-max", job.verify_opts.ell_max,
                     "largest angular momentum");
  verify->add_option("--dims", job.dims, "spatial dimensions")->delimiter(',');
  verify->add_option("--oracle-points", job.verify_opts.oracle_points,
                     "finite-difference base grid size");
  verify->add_option("--oracle-refinements",
                     job.verify_opts.oracle_refinements,
                     "Richardson grid doublings");
  verify->add_flag("--skip-oracle",
                   [&](size_t) { job.verify_opts.with_oracle = false; },
                   "skip the finite-difference comparison");
  add_tolerance_options(verify, job.verify_opts.tol);

  auto* oracle = app.add_subcommand(
      "oracle-compare", "closed form vs finite-difference eigenvalues");
  add_common(oracle);
  oracle->add_option("--n-max", job.n_max, "largest radial quantum number");
  oracle->add_option("--ell-max", job.ell_max, "largest angular momentum");
  oracle->add_option("--dims", job.dims, "spatial dimensions")->delimiter(',');
  oracle->add_option("--points", job.oracle_points, "base grid size");
  oracle->add_option("--refinements", job.oracle_refinements,
                     "Richardson grid doublings");
  oracle->add_option("--tol-oracle", job.verify_opts.tol.oracle_rel,
                     "relative tolerance for the comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // CLI11 returns 0 for --help; map real parse failures to exit 1
    return code == 0 ? 0 : psharm::cli::exit_usage;
  }

  if (spectrum->parsed()) job.command = Command::spectrum;
  if (wavefunction->parsed()) job.command = Command::wavefunction;
  if (ladder->parsed()) job.command = Command::ladder;
  if (verify->parsed()) job.command = Command::verify;
  if (oracle->parsed()) job.command = Command::oracle_compare;

  if (!preset.empty()) {
    if (preset == "harmonic") {
      job.inline_coeffs = psharm::CoefficientSet{
          0.5, 0.0, 0.0, job.units.value_or(psharm::UnitSystem{})};
    } else if (preset == "pseudoharmonic") {
      // used together with --De/--re; the preset only names the family
      if (!flags.has_de && !flags.has_a1 && flags.molecules.empty()) {
        std::cerr << "psharm: preset 'pseudoharmonic' needs --De and --re\n";
        return psharm::cli::exit_usage;
      }
    } else {
      std::cerr << "psharm: unknown preset '" << preset << "'\n";
      return psharm::cli::exit_usage;
    }
  }

  apply_coeffs(flags, job);
  return psharm::cli::run(job, std::cout, std::cerr);
}
