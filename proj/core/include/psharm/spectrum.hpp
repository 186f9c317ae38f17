#pragma once

#include <span>
#include <vector>

#include "psharm/core.hpp"

namespace psharm::spectrum {

/// One bound level. epsilon_sq is the reduced energy
/// eps^2 = 2M(E - a3)/hbar^2 = 4 mu (n + eta/2).
struct EnergyLevel {
  double energy = 0.0;
  double epsilon_sq = 0.0;
  QuantumNumbers qn{};
  ReducedParams rp{};
};

/// Closed-form eigenvalue
///   E = a3 + sqrt(8 hbar^2 a1 / M) [ n + 1/2 + (1/4) sqrt((N+2l-2)^2 + 8 M a2/hbar^2) ]
/// cross-checked at construction against the quantization-condition route
/// E = a3 + hbar^2 eps^2 / (2M) with eps^2 = 4 mu (n + eta/2).
EnergyLevel energy(const CoefficientSet& c, const QuantumNumbers& q);

/// Constant spacing E(n+1) - E(n) = sqrt(8 hbar^2 a1 / M).
double level_spacing(const CoefficientSet& c);

/// Lower-dimensional special cases, each computed from its literal formula,
/// independent of energy().
enum class SpecialCase {
  osc3d,      // 3-D isotropic oscillator:           E = hw (2n + l + 3/2)
  oscNd,      // N-D isotropic oscillator:           E = hw (2n + l + N/2)
  osc_inv2d,  // 2-D oscillator + a2/r^2:            E = hw (2n + k_l2 + 1)
  osc_inv3d,  // 3-D oscillator + a2/r^2:            E = (hw/2)[4n + 2 + sqrt((2l+1)^2 + 8Ma2/h^2)]
  pseudo3d,   // 3-D pseudoharmonic:                 E = a3 + sqrt(8 h^2 a1/M)[n + 1/2 + (1/4)sqrt((2l+1)^2 + 8Ma2/h^2)]
};

/// Inputs for special_case_energy. Oscillator cases are parameterized by the
/// circular frequency omega (internally a1 = M omega^2 / 2); pseudo3d takes
/// the raw coefficients. Fields that a case does not use must stay zero or
/// the parameter pattern is rejected with a domain error.
struct SpecialCaseInputs {
  QuantumNumbers qn{};
  UnitSystem units{};
  double omega = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
};

double special_case_energy(SpecialCase c, const SpecialCaseInputs& in);

/// All levels with n <= n_max, ell <= ell_max, N in dims, sorted by
/// (N, energy, ell, n). Deterministic ordering.
std::vector<EnergyLevel> level_table(const CoefficientSet& c, int n_max,
                                     int ell_max, std::span<const int> dims);

}  // namespace psharm::spectrum
