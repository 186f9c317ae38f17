#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "psharm/core.hpp"
#include "psharm/verify.hpp"

namespace psharm::cli {

enum class Command { spectrum, wavefunction, ladder, verify, oracle_compare };

/// Fully resolved job description. Exactly one coefficient source must be
/// set: inline a1/a2/a3, molecular De/re, or a molecule-file reference.
struct JobSpec {
  Command command = Command::spectrum;

  std::optional<CoefficientSet> inline_coeffs;
  std::optional<MolecularParams> molecular;
  std::string molecule_file;  // used with molecule_key
  std::string molecule_key;

  // When unset: molecule-file records carry their own units, the other
  // sources default to hbar = mass = 1.
  std::optional<UnitSystem> units;

  int n_max = 0;
  int ell_max = 0;
  std::vector<int> dims{3};

  // wavefunction sampling
  int n = 0;
  int ell = 0;
  int samples = 200;
  double r_max = 0.0;  // 0 = automatic

  // oracle-compare
  int oracle_points = 1500;
  int oracle_refinements = 3;

  verify::Options verify_opts{};

  std::string format = "pretty";  // csv | json | pretty
  std::string out_path;           // empty = stdout
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_verification_failure = 2;

/// Executes the job; writes the artifact to out_path (or `out` when no path
/// is set) and diagnostics to `err`. Returns the process exit code:
/// 0 success, 1 usage/domain error, 2 verification failure.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Reads the energies back from a spectrum JSON artifact (round-trip
/// support and testing).
std::vector<double> load_spectrum_energies_json(const std::string& path);

/// 12-significant-digit shortest decimal used in human-readable tables.
std::string format_sig12(double v);

}  // namespace psharm::cli
