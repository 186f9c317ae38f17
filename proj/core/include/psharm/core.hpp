#pragma once

#include <string>

namespace psharm {

/// Mechanical units entering the radial problem. Defaults are the natural
/// units used throughout the special-case literature.
struct UnitSystem {
  double hbar = 1.0;
  double mass = 1.0;
};

/// Molecular parameterization of the potential: dissociation energy De and
/// equilibrium distance re, V(r) = De (r/re - re/r)^2.
struct MolecularParams {
  double De = 0.0;
  double re = 0.0;
};

/// Coefficient form V(r) = a1 r^2 + a2 / r^2 + a3.
/// a1 > 0 is required whenever a bound spectrum is requested; a2 >= 0.
struct CoefficientSet {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  UnitSystem units{};
};

/// (n, ell, N): radial node count, orbital angular momentum, spatial
/// dimension N >= 2.
struct QuantumNumbers {
  int n = 0;
  int ell = 0;
  int dim = 3;
};

/// Derived symbols driving every closed form:
///   nu(nu+1) = ell(ell+N-2) + 2 M a2 / hbar^2   (non-negative root)
///   mu       = sqrt(2 M a1 / hbar^2)
///   k        = [(N-2) + sqrt((N-2)^2 + 4 nu(nu+1))] / 2   (k_+ root)
///   eta      = k - N/2 + 2
struct ReducedParams {
  double nu = 0.0;
  double mu = 0.0;
  double k = 0.0;
  double eta = 0.0;
};

void validate(const UnitSystem& u);
void validate(const QuantumNumbers& q);

/// Coefficient mapping a1 = De/re^2, a2 = De re^2, a3 = -2 De.
CoefficientSet from_molecular(const MolecularParams& m,
                              const UnitSystem& units = {});

/// Reduces (a1, a2, ell, N) to the derived symbols. Throws
/// std::domain_error when a1 <= 0 (no bound spectrum) or a2 < 0.
ReducedParams reduce(const CoefficientSet& c, const QuantumNumbers& q);

/// Potential value a1 r^2 + a2/r^2 + a3 at r > 0.
double potential_value(const CoefficientSet& c, double r);

}  // namespace psharm
