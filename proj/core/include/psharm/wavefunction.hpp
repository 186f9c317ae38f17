#pragma once

#include <vector>

#include "psharm/core.hpp"

namespace psharm::radial {

/// A normalized radial eigenfunction
///   R(r) = C exp(-mu r^2/2) r^{eta - N/2} L_n^{eta-1}(mu r^2)
/// with the Laguerre-form constant C = sqrt(2) mu^{eta/2} sqrt(n!/Gamma(eta+n))
/// and its z = mu r^2 form
///   R(z) = zeta exp(-z/2) z^{eta/2 - N/4} L_n^{eta-1}(z),
///   zeta = sqrt(2) mu^{N/4} sqrt(n!/Gamma(eta+n)).
struct RadialState {
  QuantumNumbers qn{};
  ReducedParams rp{};
  CoefficientSet coeffs{};
  double norm_const = 0.0;  // r-form prefactor
  double zeta = 0.0;        // z-form prefactor
};

/// Strictly increasing radial sample points (all > 0) with quadrature
/// weights (trapezoidal by default).
struct RadialGrid {
  std::vector<double> points;
  std::vector<double> weights;
};

/// Builds the state; asserts that the 1F1-form constant times the
/// Laguerre-conversion factor reproduces the Laguerre-form constant.
RadialState make_state(const CoefficientSet& c, const QuantumNumbers& q);

/// R(r) for r >= 0 (r = 0 returns the finite limit; eta - N/2 >= 0 always
/// holds for valid states). r < 0 is a domain error.
double eval_r(const RadialState& s, double r);

/// R(z) for z >= 0; equals eval_r at r = sqrt(z/mu).
double eval_z(const RadialState& s, double z);

/// dR/dz, analytic (Laguerre recurrences); z > 0.
double eval_z_derivative(const RadialState& s, double z);

struct RadialDerivs {
  double value;
  double d1;
  double d2;
};

/// R, R', R'' with respect to r, analytic; r > 0.
RadialDerivs eval_r_derivs(const RadialState& s, double r);

/// Outer radius past the outermost Laguerre zero with a wide Gaussian
/// margin: sqrt((4n + 2 eta + 55)/mu). The tail beyond it is below 1e-12.
double suggested_r_max(const RadialState& s);

/// Log-spaced grid on [1e-3/sqrt(mu), suggested_r_max] for residual checks.
RadialGrid make_log_grid(const RadialState& s, int points = 400);

/// int_0^infty R^2 r^{N-1} dr by adaptive quadrature (expected 1).
double norm_integral(const RadialState& s, double tolerance = 1e-10);

/// int_0^infty R1 R2 r^{N-1} dr; states must share (ell, N) and
/// coefficients, only n may differ.
double overlap(const RadialState& s1, const RadialState& s2,
               double tolerance = 1e-10);

/// Max-norm residual of the radial equation
///   R'' + (N-1)/r R' - l(l+N-2) R/r^2 - (2M/hbar^2)(V - E) R
/// over the grid, normalized by max |R|. Analytic derivatives throughout.
double residual(const RadialState& s, double energy, const RadialGrid& grid);

}  // namespace psharm::radial
