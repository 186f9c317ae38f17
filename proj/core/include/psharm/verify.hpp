#pragma once

#include <span>
#include <string>
#include <vector>

#include "psharm/core.hpp"

namespace psharm::verify {

/// Module-level tolerances; the verify driver composes module checks and
/// introduces no thresholds of its own.
struct Tolerances {
  double normalization = 1e-8;      // |norm integral - 1|
  double orthogonality = 1e-8;      // |overlap|, n1 != n2
  double residual_exact = 1e-9;     // radial-equation residual at exact E
  double residual_detuned = 1e-2;   // residual floor at E + 0.1 spacing
  double ladder_pointwise = 1e-10;  // differential vs spectral ladder
  double algebra = 1e-13;           // commutators, powers, Casimir
  double oracle_rel = 1e-6;         // closed form vs extrapolated FD
};

struct Options {
  Tolerances tol{};
  int n_max = 3;
  int ell_max = 2;
  int oracle_points = 1200;
  int oracle_refinements = 3;
  bool with_oracle = true;  // FD comparison dominates runtime
};

struct CheckResult {
  std::string name;
  double observed = 0.0;
  double threshold = 0.0;
  bool require_at_least = false;  // detuned residual must *exceed* threshold
  bool pass = false;
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_pass = true;
};

/// Runs the full verification network for one coefficient set over the
/// given dimensions.
Report run_verification(const CoefficientSet& c, std::span<const int> dims,
                        const Options& opts = {});

}  // namespace psharm::verify
